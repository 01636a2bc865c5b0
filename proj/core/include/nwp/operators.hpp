#pragma once

#include "nwp/grid.hpp"
#include "nwp/scenario.hpp"

namespace nwp {

/// A Hamiltonian as coefficients over {p^2, p, x, x^2, 1}. p is realized
/// spectrally as -i hbar d/dx when applied. Keeping operators symbolic makes
/// the decomposition identity an exact coefficient statement and keeps
/// application O(n log n).
struct OperatorSpec {
    double c_pp = 0.0;
    double c_p = 0.0;
    double c_x = 0.0;
    double c_xx = 0.0;
    double c_0 = 0.0;

    bool operator==(const OperatorSpec&) const = default;
};

OperatorSpec operator+(const OperatorSpec& a, const OperatorSpec& b);
OperatorSpec operator-(const OperatorSpec& a, const OperatorSpec& b);

/// The governing Hamiltonian of the scenario at time t.
OperatorSpec full_hamiltonian(const ScenarioParams& p, double t);

/// The part the packet is an instantaneous eigenstate of.
OperatorSpec h_tilde(const ScenarioParams& p, double t);

/// The remainder full_hamiltonian - h_tilde; the piece that moves the packet.
OperatorSpec h_c(const ScenarioParams& p, double t);

/// Instantaneous eigenvalue of h_tilde on the packet.
double e_tilde(const ScenarioParams& p, double t);

/// Apply the operator to a field; derivatives are spectral, so the field
/// should be smooth and interior-supported.
WaveField apply_operator(const OperatorSpec& op, const WaveField& f, double hbar = 1.0);

/// Windowed relative residual ||(h_tilde - e_tilde) psi|| / ||psi|| for the
/// scenario's packet at time t. Airy envelopes are apodized before the
/// spectral derivatives are taken; keep the window inside the untapered
/// interior.
double eigen_residual(const ScenarioParams& p, double t, const Grid1D& grid,
                      const Window& window);

} // namespace nwp
