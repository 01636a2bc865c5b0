#include "nwp/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace nwp {

std::pair<double, double> hc_vector_field(const ScenarioParams& p, double t,
                                          double /*x*/, double /*pmom*/) {
    const OperatorSpec hc = h_c(p, t);
    return {hc.c_p, -hc.c_x};
}

TrajectoryRecord integrate_between(const ScenarioParams& p, double t0, double x0,
                                   double p0, double t1, double dt) {
    if (dt == 0.0) throw std::invalid_argument("integrate: dt must be nonzero");
    if ((t1 - t0) * dt < 0.0)
        throw std::invalid_argument("integrate: dt sign must match direction");

    TrajectoryRecord rec;
    double t = t0, x = x0, pm = p0;
    rec.points.push_back({t, x, pm});
    rec.d_analytic.push_back(trajectory_d(p, t));
    rec.x_mode_quantum.push_back(std::nullopt);

    const double span = t1 - t0;
    const auto nsteps = static_cast<std::size_t>(std::ceil(std::abs(span / dt) - 1e-12));
    for (std::size_t s = 0; s < nsteps; ++s) {
        double h = dt;
        if ((t + h - t1) * dt > 0.0) h = t1 - t; // clip final step
        const auto [k1x, k1p] = hc_vector_field(p, t, x, pm);
        const auto [k2x, k2p] = hc_vector_field(p, t + 0.5 * h, x + 0.5 * h * k1x, pm + 0.5 * h * k1p);
        const auto [k3x, k3p] = hc_vector_field(p, t + 0.5 * h, x + 0.5 * h * k2x, pm + 0.5 * h * k2p);
        const auto [k4x, k4p] = hc_vector_field(p, t + h, x + h * k3x, pm + h * k3p);
        x += h / 6.0 * (k1x + 2.0 * (k2x + k3x) + k4x);
        pm += h / 6.0 * (k1p + 2.0 * (k2p + k3p) + k4p);
        t += h;
        rec.points.push_back({t, x, pm});
        rec.d_analytic.push_back(trajectory_d(p, t));
        rec.x_mode_quantum.push_back(std::nullopt);
    }
    return rec;
}

TrajectoryRecord integrate_hc(const ScenarioParams& p, double x0, double p0,
                              double t_end, double dt) {
    return integrate_between(p, 0.0, x0, p0, t_end, dt);
}

CompareResult compare_classical_quantum(const ScenarioParams& p_quantum,
                                        const ScenarioParams& p_classical,
                                        const Grid1D& grid, const EvolutionConfig& evo,
                                        double t_end, std::size_t samples) {
    if (samples < 2) throw std::invalid_argument("compare: need at least two samples");

    const double x0 = trajectory_d(p_classical, 0.0);
    const double p0 = p_classical.m * trajectory_d_dot(p_classical, 0.0);
    const TrajectoryRecord cl = integrate_between(p_classical, 0.0, x0, p0, t_end, evo.dt);

    const WaveField f0 = initial_state(p_quantum, grid, evo);
    const double mode0 = mode_position(f0);
    const double d0_cl = trajectory_d(p_classical, 0.0);

    CompareResult res;
    res.tol_classical = 1e-6;
    res.tol_quantum = 2.0 * grid.dx;

    double tracked = mode0;
    double prev_d = trajectory_d(p_quantum, 0.0);
    for (std::size_t s = 0; s < samples; ++s) {
        const double t = t_end * static_cast<double>(s) / static_cast<double>(samples - 1);
        CompareRow row;
        row.t = t;
        row.d_analytic = trajectory_d(p_classical, t);

        // classical point: nearest RK4 sample (dt divides the sample spacing
        // in normal configurations; interpolation is not needed for the check)
        std::size_t idx = 0;
        double best = std::abs(cl.points[0].t - t);
        for (std::size_t i = 1; i < cl.points.size(); ++i) {
            const double dist = std::abs(cl.points[i].t - t);
            if (dist < best) {
                best = dist;
                idx = i;
            }
        }
        row.x_classical = cl.points[idx].x;
        row.p_classical = cl.points[idx].p;

        const WaveField psi = exact_evolve(f0, p_quantum, t);
        const double d_q = trajectory_d(p_quantum, t);
        tracked = mode_position_near(psi, tracked + (d_q - prev_d));
        prev_d = d_q;
        row.x_mode_quantum = tracked;

        const double cl_err = std::abs(row.x_classical - row.d_analytic);
        const double q_err =
            std::abs((row.x_mode_quantum - mode0) - (row.d_analytic - d0_cl));
        row.classical_ok = cl_err <= res.tol_classical;
        row.quantum_ok = q_err <= res.tol_quantum;
        res.max_classical_err = std::max(res.max_classical_err, cl_err);
        res.max_quantum_err = std::max(res.max_quantum_err, q_err);
        res.classical_pass = res.classical_pass && row.classical_ok;
        res.quantum_pass = res.quantum_pass && row.quantum_ok;
        res.rows.push_back(row);
    }
    return res;
}

CompareResult compare_classical_quantum(const ScenarioParams& p, const Grid1D& grid,
                                        const EvolutionConfig& evo, double t_end,
                                        std::size_t samples) {
    return compare_classical_quantum(p, p, grid, evo, t_end, samples);
}

} // namespace nwp
