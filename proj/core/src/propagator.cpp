#include "nwp/propagator.hpp"

#include "nwp/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace nwp {

namespace {

std::complex<double> cis(double a) { return {std::cos(a), std::sin(a)}; }

bool potential_is_static(const ScenarioParams& p) {
    return p.case_tag != CaseTag::ForcedAiry ||
           p.force.kind == ForceProfile::Kind::Constant;
}

// exp(-i V(x, t) dt / hbar) factors from the x-part of the full Hamiltonian.
std::vector<std::complex<double>> potential_factor(const ScenarioParams& p,
                                                   const Grid1D& grid, double t,
                                                   double dt) {
    const OperatorSpec h = full_hamiltonian(p, t);
    std::vector<std::complex<double>> fac(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double x = grid.x(j);
        const double v = h.c_x * x + h.c_xx * x * x + h.c_0;
        fac[j] = cis(-v * dt / p.hbar);
    }
    return fac;
}

} // namespace

void validate_evolution(const EvolutionConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("evolution: dt must be positive");
    if (cfg.steps < 1) throw std::invalid_argument("evolution: steps must be >= 1");
    if (!(cfg.boundary_margin > 0.0 && cfg.boundary_margin < 0.5))
        throw std::invalid_argument("evolution: boundary margin must be in (0, 0.5)");
}

WaveField initial_state(const ScenarioParams& p, const Grid1D& grid,
                        const EvolutionConfig& cfg) {
    WaveField f0 = build_packet(p, 0.0, grid);
    if (cfg.apodize && is_airy(p)) f0 = apply_mask(f0, taper_mask(grid, cfg.boundary_margin));
    return f0;
}

WaveField split_step_evolve(const WaveField& f, const ScenarioParams& p,
                            const EvolutionConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("split_step_evolve: dt must be positive");
    if (cfg.steps == 0) return f;

    const Grid1D& g = f.grid;
    const double dt = cfg.dt;

    std::vector<std::complex<double>> kinetic(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double k = g.k(j);
        kinetic[j] = cis(-p.hbar * k * k * dt / (2.0 * p.m));
    }

    const bool static_v = potential_is_static(p);
    std::vector<std::complex<double>> half;
    if (static_v) half = potential_factor(p, g, f.t, 0.5 * dt);

    WaveField out = f;
    double t = f.t;
    for (std::size_t s = 0; s < cfg.steps; ++s) {
        if (!static_v) half = potential_factor(p, g, t + 0.5 * dt, 0.5 * dt);
        for (std::size_t j = 0; j < g.n; ++j) out.samples[j] *= half[j];
        fft::forward(out.samples);
        for (std::size_t j = 0; j < g.n; ++j) out.samples[j] *= kinetic[j];
        fft::inverse(out.samples);
        for (std::size_t j = 0; j < g.n; ++j) out.samples[j] *= half[j];
        t += dt;
    }
    out.t = f.t + static_cast<double>(cfg.steps) * dt;
    return out;
}

WaveField exact_evolve(const WaveField& f0, const ScenarioParams& p, double t) {
    const PhaseDecomposition now = phase_decomposition(p, t);
    const PhaseDecomposition start = phase_decomposition(p, 0.0);
    const double shift = now.d - start.d;
    WaveField out = spatial_shift(f0, shift);
    const double slope = p.m * (now.d_dot - start.d_dot);
    const double offset = now.phi0 + p.m * start.d_dot * shift;
    for (std::size_t j = 0; j < out.grid.n; ++j)
        out.samples[j] *= cis((slope * out.grid.x(j) + offset) / p.hbar);
    out.t = t;
    return out;
}

double infinitesimal_factor_check(const ScenarioParams& p, double t, double dt,
                                  const Grid1D& grid) {
    WaveField psi = build_packet(p, t, grid);
    if (is_airy(p)) psi = apply_mask(psi, taper_mask(grid, 0.10));

    EvolutionConfig one;
    one.dt = dt;
    one.steps = 1;
    const WaveField via_split = split_step_evolve(psi, p, one);

    const OperatorSpec hc = h_c(p, t);
    const double et = e_tilde(p, t);
    WaveField via_factor = spatial_shift(psi, hc.c_p * dt);
    for (std::size_t j = 0; j < grid.n; ++j)
        via_factor.samples[j] *= cis(-(hc.c_x * grid.x(j) + et) * dt / p.hbar);

    WaveField diff = via_split;
    for (std::size_t j = 0; j < grid.n; ++j) diff.samples[j] -= via_factor.samples[j];
    return l2_norm(diff, inner_window(grid, 0.15));
}

WaveField product_formula_evolve(const WaveField& f0, const ScenarioParams& p,
                                 double t, std::size_t N) {
    if (N < 1) throw std::invalid_argument("product_formula_evolve: N must be >= 1");
    const double step = t / static_cast<double>(N);
    WaveField out = f0;
    for (std::size_t i = 0; i < N; ++i) {
        const double mid = (static_cast<double>(i) + 0.5) * step;
        const OperatorSpec hc = h_c(p, mid);
        const double et = e_tilde(p, mid);
        out = spatial_shift(out, hc.c_p * step);
        for (std::size_t j = 0; j < out.grid.n; ++j)
            out.samples[j] *= cis(-(hc.c_x * out.grid.x(j) + et) * step / p.hbar);
    }
    out.t = f0.t + t;
    return out;
}

} // namespace nwp
