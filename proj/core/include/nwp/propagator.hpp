#pragma once

#include "nwp/grid.hpp"
#include "nwp/operators.hpp"
#include "nwp/scenario.hpp"

namespace nwp {

struct EvolutionConfig {
    double dt = 1e-3;
    std::size_t steps = 1;
    bool apodize = true;
    double boundary_margin = 0.10;
};

void validate_evolution(const EvolutionConfig& cfg);

/// Scenario packet at t = 0, apodized when the case calls for it (Airy
/// envelopes with cfg.apodize set). This is the field both propagation
/// paths should start from.
WaveField initial_state(const ScenarioParams& p, const Grid1D& grid,
                        const EvolutionConfig& cfg);

/// Strang-split spectral step: exp(-iV dt/2h) exp(-iT dt/h) exp(-iV dt/2h)
/// per step, with the potential sampled at the step midpoint so the scheme
/// stays second order for time-dependent forces. Advances f by
/// cfg.steps * cfg.dt starting from f.t.
WaveField split_step_evolve(const WaveField& f, const ScenarioParams& p,
                            const EvolutionConfig& cfg);

/// Closed-form finite-time evolution: phase factor times rigid spectral
/// shift by d(t) - d(0). f0 must be the scenario's t = 0 packet (caller's
/// responsibility, unchecked). The phase includes the cross term
/// m d_dot(0) (d(t) - d(0)) that cancels the shift-induced phase when the
/// initial velocity is nonzero.
WaveField exact_evolve(const WaveField& f0, const ScenarioParams& p, double t);

/// Windowed L2 discrepancy between one split step over dt and the
/// single-step factorization phase * exp(-i c_x x dt/h) * shift(d_dot dt),
/// both applied to the packet at time t. O(dt^2) in exact arithmetic.
double infinitesimal_factor_check(const ScenarioParams& p, double t, double dt,
                                  const Grid1D& grid);

/// Finite-time evolution as a product of N single-step factorizations with
/// per-step quantities sampled at substep midpoints. First-order accurate;
/// converges to exact_evolve as N grows.
WaveField product_formula_evolve(const WaveField& f0, const ScenarioParams& p,
                                 double t, std::size_t N);

} // namespace nwp
