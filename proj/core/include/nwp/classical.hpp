#pragma once

#include "nwp/grid.hpp"
#include "nwp/propagator.hpp"
#include "nwp/scenario.hpp"

#include <optional>
#include <vector>

namespace nwp {

struct PhasePoint {
    double t = 0.0;
    double x = 0.0;
    double p = 0.0;
};

/// Sampled trajectory: classical phase points plus, per sample, the
/// analytic d(t) and (optionally) the tracked quantum mode position.
struct TrajectoryRecord {
    std::vector<PhasePoint> points;
    std::vector<double> d_analytic;
    std::vector<std::optional<double>> x_mode_quantum;
};

/// Hamilton vector field of h_c: (dx/dt, dp/dt) = (dH_c/dp, -dH_c/dx).
/// Depends on t only, so integrating it is pure quadrature.
std::pair<double, double> hc_vector_field(const ScenarioParams& p, double t,
                                          double x, double pmom);

/// Fixed-step RK4 from (t0, x0, p0) to t1; dt's sign must match the
/// direction of integration.
TrajectoryRecord integrate_between(const ScenarioParams& p, double t0, double x0,
                                   double p0, double t1, double dt);

/// RK4 from t = 0, the paper-facing entry point.
TrajectoryRecord integrate_hc(const ScenarioParams& p, double x0, double p0,
                              double t_end, double dt);

struct CompareRow {
    double t = 0.0;
    double x_classical = 0.0;
    double p_classical = 0.0;
    double d_analytic = 0.0;
    double x_mode_quantum = 0.0;
    bool classical_ok = true;
    bool quantum_ok = true;
};

struct CompareResult {
    std::vector<CompareRow> rows;
    double max_classical_err = 0.0;
    double max_quantum_err = 0.0;
    double tol_classical = 0.0;
    double tol_quantum = 0.0;
    bool classical_pass = true;
    bool quantum_pass = true;
};

/// Classical RK4 under h_c versus analytic d(t) versus the mode of the
/// exactly evolved packet. Thresholds: |x_cl - d| <= 1e-6 and
/// |dmode - dd| <= 2 dx. Failures are flagged per row, never thrown.
/// The quantum mode follows the lobe nearest its propagated estimate so
/// multi-lobed levels track one lobe consistently.
CompareResult compare_classical_quantum(const ScenarioParams& p, const Grid1D& grid,
                                        const EvolutionConfig& evo, double t_end,
                                        std::size_t samples);

/// Negative-control variant: the quantum half evolves under p_quantum while
/// the classical half and the analytic column use p_classical.
CompareResult compare_classical_quantum(const ScenarioParams& p_quantum,
                                        const ScenarioParams& p_classical,
                                        const Grid1D& grid, const EvolutionConfig& evo,
                                        double t_end, std::size_t samples);

} // namespace nwp
