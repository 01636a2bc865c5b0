#include "nwp/operators.hpp"

#include "nwp/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace nwp {

OperatorSpec operator+(const OperatorSpec& a, const OperatorSpec& b) {
    return {a.c_pp + b.c_pp, a.c_p + b.c_p, a.c_x + b.c_x, a.c_xx + b.c_xx, a.c_0 + b.c_0};
}

OperatorSpec operator-(const OperatorSpec& a, const OperatorSpec& b) {
    return {a.c_pp - b.c_pp, a.c_p - b.c_p, a.c_x - b.c_x, a.c_xx - b.c_xx, a.c_0 - b.c_0};
}

OperatorSpec full_hamiltonian(const ScenarioParams& p, double t) {
    OperatorSpec op;
    op.c_pp = 1.0 / (2.0 * p.m);
    switch (p.case_tag) {
    case CaseTag::FreeAiry: break;
    case CaseTag::ForcedAiry: op.c_x = -p.force.value(t); break;
    case CaseTag::SHO: op.c_xx = p.m * p.omega * p.omega / 2.0; break;
    }
    return op;
}

OperatorSpec h_tilde(const ScenarioParams& p, double t) {
    OperatorSpec op;
    op.c_pp = 1.0 / (2.0 * p.m);
    op.c_p = -trajectory_d_dot(p, t);
    switch (p.case_tag) {
    case CaseTag::FreeAiry:
    case CaseTag::ForcedAiry:
        op.c_x = f_b(p);
        break;
    case CaseTag::SHO:
        op.c_xx = p.m * p.omega * p.omega / 2.0;
        op.c_x = -(p.m * p.omega * p.omega * trajectory_d(p, t));
        break;
    }
    return op;
}

OperatorSpec h_c(const ScenarioParams& p, double t) {
    OperatorSpec op;
    op.c_p = trajectory_d_dot(p, t);
    switch (p.case_tag) {
    case CaseTag::FreeAiry: op.c_x = -f_b(p); break;
    case CaseTag::ForcedAiry: op.c_x = -(f_b(p) + p.force.value(t)); break;
    case CaseTag::SHO: op.c_x = p.m * p.omega * p.omega * trajectory_d(p, t); break;
    }
    return op;
}

double e_tilde(const ScenarioParams& p, double t) {
    switch (p.case_tag) {
    case CaseTag::FreeAiry: {
        const double dd = d0_dot(p, t);
        return f_b(p) * d0(p, t) - 0.5 * p.m * dd * dd;
    }
    case CaseTag::ForcedAiry: {
        const double dd = trajectory_d_dot(p, t);
        return f_b(p) * trajectory_d(p, t) - 0.5 * p.m * dd * dd;
    }
    case CaseTag::SHO: {
        const double d = trajectory_d(p, t);
        const double dd = trajectory_d_dot(p, t);
        return level_energy(p) - 0.5 * p.m * dd * dd -
               0.5 * p.m * p.omega * p.omega * d * d;
    }
    }
    throw std::logic_error("e_tilde: bad case");
}

WaveField apply_operator(const OperatorSpec& op, const WaveField& f, double hbar) {
    WaveField out = f;
    const std::size_t n = f.grid.n;
    if (op.c_pp != 0.0 || op.c_p != 0.0) {
        std::vector<std::complex<double>> spec = f.samples;
        fft::forward(spec);
        for (std::size_t j = 0; j < n; ++j) {
            const double hk = hbar * f.grid.k(j);
            // Nyquist bin has no symmetric partner: drop it from the odd-order
            // term so p stays Hermitian on the grid.
            const double hk_odd = (j == n / 2) ? 0.0 : hk;
            spec[j] *= op.c_pp * hk * hk + op.c_p * hk_odd;
        }
        fft::inverse(spec);
        for (std::size_t j = 0; j < n; ++j) {
            const double x = f.grid.x(j);
            out.samples[j] =
                spec[j] + (op.c_x * x + op.c_xx * x * x + op.c_0) * f.samples[j];
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = f.grid.x(j);
            out.samples[j] = (op.c_x * x + op.c_xx * x * x + op.c_0) * f.samples[j];
        }
    }
    return out;
}

double eigen_residual(const ScenarioParams& p, double t, const Grid1D& grid,
                      const Window& window) {
    validate_window(window, grid);
    WaveField psi = build_packet(p, t, grid);
    if (is_airy(p)) psi = apply_mask(psi, taper_mask(grid, 0.10));
    const double denom = l2_norm(psi, window);
    if (denom <= 0.0) throw std::domain_error("eigen_residual: zero norm on window");
    const OperatorSpec ht = h_tilde(p, t);
    const double et = e_tilde(p, t);
    WaveField r = apply_operator(ht, psi, p.hbar);
    for (std::size_t j = 0; j < grid.n; ++j) r.samples[j] -= et * psi.samples[j];
    return l2_norm(r, window) / denom;
}

} // namespace nwp
