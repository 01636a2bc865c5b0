#include "nwp/scenario.hpp"

#include "nwp/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nwp {

namespace {

// Composite Simpson with Richardson refinement on one smooth piece.
double simpson_refined(const auto& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    auto simpson = [&](int intervals) {
        const double h = (b - a) / intervals;
        double acc = f(a) + f(b);
        for (int i = 1; i < intervals; ++i)
            acc += f(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
        return acc * h / 3.0;
    };
    double coarse = simpson(8);
    for (int intervals = 16; intervals <= 4096; intervals *= 2) {
        const double fine = simpson(intervals);
        const double err = std::abs(fine - coarse) / 15.0;
        if (err <= rel_tol * std::max(1.0, std::abs(fine))) return fine;
        coarse = fine;
    }
    return coarse;
}

constexpr double kQuadRelTol = 1e-12;

void check_table_coverage(const ForceProfile& fp, double t) {
    if (fp.table.empty())
        throw std::domain_error("force profile: empty sample table");
    if (t < fp.table.front().first || t > fp.table.back().first)
        throw std::domain_error("force profile: t outside table coverage");
}

// Integrate a smooth-per-segment function over [0, t], splitting at table
// nodes so Simpson sees only polynomial pieces.
double integrate_piecewise(const ForceProfile& fp, double t, const auto& f) {
    check_table_coverage(fp, t);
    check_table_coverage(fp, 0.0);
    const double sign = t >= 0.0 ? 1.0 : -1.0;
    const double lo = std::min(0.0, t), hi = std::max(0.0, t);
    double acc = 0.0;
    double seg_lo = lo;
    for (const auto& [tn, Fn] : fp.table) {
        if (tn <= seg_lo) continue;
        const double seg_hi = std::min(tn, hi);
        if (seg_hi > seg_lo) {
            acc += simpson_refined(f, seg_lo, seg_hi, kQuadRelTol);
            seg_lo = seg_hi;
        }
        if (seg_lo >= hi) break;
    }
    if (seg_lo < hi) acc += simpson_refined(f, seg_lo, hi, kQuadRelTol);
    return sign * acc;
}

} // namespace

double ForceProfile::value(double t) const {
    switch (kind) {
    case Kind::Constant: return F0;
    case Kind::Sinusoid: return F0 * std::sin(Omega * t + phi);
    case Kind::PiecewiseLinear: {
        check_table_coverage(*this, t);
        auto it = std::upper_bound(table.begin(), table.end(), t,
                                   [](double v, const auto& node) { return v < node.first; });
        if (it == table.begin()) return table.front().second;
        if (it == table.end()) return table.back().second;
        const auto& [t1, F1] = *it;
        const auto& [t0v, F0v] = *(it - 1);
        const double w = (t - t0v) / (t1 - t0v);
        return F0v + w * (F1 - F0v);
    }
    }
    throw std::logic_error("force profile: bad kind");
}

ForceProfile constant_force(double F0) {
    ForceProfile fp;
    fp.kind = ForceProfile::Kind::Constant;
    fp.F0 = F0;
    return fp;
}

ForceProfile sinusoid_force(double F0, double Omega, double phi) {
    if (Omega == 0.0)
        throw std::invalid_argument("sinusoid_force: Omega must be nonzero");
    ForceProfile fp;
    fp.kind = ForceProfile::Kind::Sinusoid;
    fp.F0 = F0;
    fp.Omega = Omega;
    fp.phi = phi;
    return fp;
}

ForceProfile piecewise_linear_force(std::vector<std::pair<double, double>> table) {
    if (table.size() < 2)
        throw std::invalid_argument("piecewise force: need at least two nodes");
    for (std::size_t i = 1; i < table.size(); ++i)
        if (!(table[i].first > table[i - 1].first))
            throw std::invalid_argument("piecewise force: table must be strictly increasing in t");
    ForceProfile fp;
    fp.kind = ForceProfile::Kind::PiecewiseLinear;
    fp.table = std::move(table);
    return fp;
}

bool is_airy(const ScenarioParams& p) {
    return p.case_tag == CaseTag::FreeAiry || p.case_tag == CaseTag::ForcedAiry;
}

void validate_scenario(const ScenarioParams& p) {
    if (!(p.m > 0.0) || !(p.hbar > 0.0))
        throw std::invalid_argument("scenario: m and hbar must be positive");
    if (is_airy(p) && p.b == 0.0)
        throw std::invalid_argument("scenario: b must be nonzero for Airy cases");
    if (p.case_tag == CaseTag::SHO) {
        if (!(p.omega > 0.0)) throw std::invalid_argument("scenario: omega must be positive");
        if (p.A < 0.0) throw std::invalid_argument("scenario: A must be nonnegative");
        if (p.n < 0) throw std::invalid_argument("scenario: n must be nonnegative");
    }
}

double f_b(const ScenarioParams& p) {
    if (!is_airy(p)) throw std::domain_error("f_b: only defined for Airy cases");
    return p.hbar * p.hbar * p.b * p.b * p.b / (2.0 * p.m);
}

double d0(const ScenarioParams& p, double t) { return f_b(p) * t * t / (2.0 * p.m); }

double d0_dot(const ScenarioParams& p, double t) { return f_b(p) * t / p.m; }

double alpha(const ScenarioParams& p, double t) {
    if (p.case_tag != CaseTag::ForcedAiry)
        throw std::domain_error("alpha: only defined for the forced case");
    const ForceProfile& fp = p.force;
    switch (fp.kind) {
    case ForceProfile::Kind::Constant: return fp.F0 * t;
    case ForceProfile::Kind::Sinusoid:
        return fp.F0 / fp.Omega * (std::cos(fp.phi) - std::cos(fp.Omega * t + fp.phi));
    case ForceProfile::Kind::PiecewiseLinear:
        return integrate_piecewise(fp, t, [&](double tau) { return fp.value(tau); });
    }
    throw std::logic_error("alpha: bad force kind");
}

double d1(const ScenarioParams& p, double t) {
    if (p.case_tag != CaseTag::ForcedAiry)
        throw std::domain_error("d1: only defined for the forced case");
    const ForceProfile& fp = p.force;
    switch (fp.kind) {
    case ForceProfile::Kind::Constant: return fp.F0 * t * t / (2.0 * p.m);
    case ForceProfile::Kind::Sinusoid: {
        const double c = fp.F0 / (p.m * fp.Omega);
        return c * (std::cos(fp.phi) * t -
                    (std::sin(fp.Omega * t + fp.phi) - std::sin(fp.phi)) / fp.Omega);
    }
    case ForceProfile::Kind::PiecewiseLinear:
        return integrate_piecewise(fp, t, [&](double tau) { return alpha(p, tau) / p.m; });
    }
    throw std::logic_error("d1: bad force kind");
}

namespace {

// int_0^t alpha(tau)^2 dtau, needed by the forced-case global phase.
double int_alpha_sq(const ScenarioParams& p, double t) {
    const ForceProfile& fp = p.force;
    switch (fp.kind) {
    case ForceProfile::Kind::Constant: return fp.F0 * fp.F0 * t * t * t / 3.0;
    case ForceProfile::Kind::Sinusoid: {
        const double c = fp.F0 / fp.Omega;
        const double cp = std::cos(fp.phi);
        const double s1 = std::sin(fp.Omega * t + fp.phi) - std::sin(fp.phi);
        const double s2 = std::sin(2.0 * (fp.Omega * t + fp.phi)) - std::sin(2.0 * fp.phi);
        return c * c * (cp * cp * t - 2.0 * cp * s1 / fp.Omega + 0.5 * t + s2 / (4.0 * fp.Omega));
    }
    case ForceProfile::Kind::PiecewiseLinear:
        return integrate_piecewise(fp, t, [&](double tau) {
            const double a = alpha(p, tau);
            return a * a;
        });
    }
    throw std::logic_error("int_alpha_sq: bad force kind");
}

} // namespace

double trajectory_d(const ScenarioParams& p, double t) {
    switch (p.case_tag) {
    case CaseTag::FreeAiry: return d0(p, t);
    case CaseTag::ForcedAiry: return d0(p, t) + d1(p, t);
    case CaseTag::SHO: return p.A * std::cos(p.omega * t + p.theta);
    }
    throw std::logic_error("trajectory_d: bad case");
}

double trajectory_d_dot(const ScenarioParams& p, double t) {
    switch (p.case_tag) {
    case CaseTag::FreeAiry: return d0_dot(p, t);
    case CaseTag::ForcedAiry: return d0_dot(p, t) + alpha(p, t) / p.m;
    case CaseTag::SHO: return -p.A * p.omega * std::sin(p.omega * t + p.theta);
    }
    throw std::logic_error("trajectory_d_dot: bad case");
}

double level_energy(const ScenarioParams& p) {
    return (static_cast<double>(p.n) + 0.5) * p.hbar * p.omega;
}

double phi0(const ScenarioParams& p, double t) {
    switch (p.case_tag) {
    case CaseTag::FreeAiry: {
        const double fb = f_b(p);
        return -fb * fb * t * t * t / (3.0 * p.m);
    }
    case CaseTag::ForcedAiry: {
        const double fb = f_b(p);
        return -fb * fb * t * t * t / (3.0 * p.m) - fb * t * d1(p, t) -
               int_alpha_sq(p, t) / (2.0 * p.m);
    }
    case CaseTag::SHO: {
        // closed form of -E_n t - int_0^t (m/2)(d_dot^2 - omega^2 d^2)
        const double arg = p.omega * t + p.theta;
        return -level_energy(p) * t +
               (p.m * p.A * p.A * p.omega / 4.0) *
                   (std::sin(2.0 * arg) - std::sin(2.0 * p.theta));
    }
    }
    throw std::logic_error("phi0: bad case");
}

PhaseDecomposition phase_decomposition(const ScenarioParams& p, double t) {
    PhaseDecomposition pd;
    pd.d = trajectory_d(p, t);
    pd.d_dot = trajectory_d_dot(p, t);
    pd.phi0 = phi0(p, t);
    pd.phi_of_x = p.m * pd.d_dot;
    return pd;
}

WaveField build_packet(const ScenarioParams& p, double t, const Grid1D& grid) {
    validate_scenario(p);
    if (p.case_tag == CaseTag::SHO && p.n > 20)
        throw std::invalid_argument("build_packet: SHO level above supported range (n <= 20)");
    const PhaseDecomposition pd = phase_decomposition(p, t);
    WaveField f = make_field(grid, t);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double x = grid.x(j);
        const double env = is_airy(p) ? airy_ai(p.b * (x - pd.d))
                                      : hermite_psi(p.n, x - pd.d, p.m, p.omega, p.hbar);
        const double ph = (pd.phi_of_x * x + pd.phi0) / p.hbar;
        f.samples[j] = env * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return f;
}

} // namespace nwp
