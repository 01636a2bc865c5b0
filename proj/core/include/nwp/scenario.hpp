#pragma once

#include "nwp/grid.hpp"

#include <vector>

namespace nwp {

enum class CaseTag { FreeAiry, ForcedAiry, SHO };

/// Spatially uniform driving force F(t) for the linear-potential case.
struct ForceProfile {
    enum class Kind { Constant, Sinusoid, PiecewiseLinear };
    Kind kind = Kind::Constant;

    double F0 = 0.0;    // Constant amplitude, or Sinusoid amplitude
    double Omega = 0.0; // Sinusoid angular frequency
    double phi = 0.0;   // Sinusoid phase: F(t) = F0 sin(Omega t + phi)

    /// PiecewiseLinear: (t_i, F_i) nodes, strictly increasing in t. Queries
    /// must stay inside the covered range.
    std::vector<std::pair<double, double>> table;

    double value(double t) const;
};

ForceProfile constant_force(double F0);
ForceProfile sinusoid_force(double F0, double Omega, double phi = 0.0);
ForceProfile piecewise_linear_force(std::vector<std::pair<double, double>> table);

struct ScenarioParams {
    CaseTag case_tag = CaseTag::FreeAiry;
    double m = 1.0;
    double hbar = 1.0;

    // Airy cases
    double b = 1.0; // inverse-length scale of the packet, nonzero
    ForceProfile force; // ForcedAiry only

    // SHO case
    double omega = 1.0;
    double A = 0.0;
    double theta = 0.0;
    int n = 0;
};

void validate_scenario(const ScenarioParams& p);
bool is_airy(const ScenarioParams& p);

/// Trajectory value, velocity, and the two phase ingredients at time t.
/// phi_of_x is the x-coefficient of the total phase and equals m * d_dot
/// exactly (computed from the same doubles).
struct PhaseDecomposition {
    double d = 0.0;
    double d_dot = 0.0;
    double phi0 = 0.0;
    double phi_of_x = 0.0;
};

/// Characteristic self-force of the Airy packet, hbar^2 b^3 / (2 m).
double f_b(const ScenarioParams& p);

/// Free-space trajectory f_b t^2 / (2 m) and its velocity.
double d0(const ScenarioParams& p, double t);
double d0_dot(const ScenarioParams& p, double t);

/// Accumulated impulse of the force profile from 0 to t.
double alpha(const ScenarioParams& p, double t);

/// Drift contributed by the driving force: double time integral of F/m.
double d1(const ScenarioParams& p, double t);

/// Case dispatch of the packet trajectory d(t) and its time derivative.
double trajectory_d(const ScenarioParams& p, double t);
double trajectory_d_dot(const ScenarioParams& p, double t);

/// Global (x-independent) phase term of the packet at time t.
double phi0(const ScenarioParams& p, double t);

PhaseDecomposition phase_decomposition(const ScenarioParams& p, double t);

/// SHO level energy (n + 1/2) hbar omega.
double level_energy(const ScenarioParams& p);

/// Analytic packet samples at time t: envelope translated to d(t) times
/// exp(i (m d_dot x + phi0) / hbar). No apodization is applied here.
WaveField build_packet(const ScenarioParams& p, double t, const Grid1D& grid);

} // namespace nwp
