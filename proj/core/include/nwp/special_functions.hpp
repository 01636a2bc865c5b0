#pragma once

namespace nwp {

/// Tuning knobs for the two-regime Airy evaluation. Defaults hold the
/// absolute error under 1e-10 on [-30, 10]; see airy_ai.
struct AiryEvalConfig {
    double series_cutoff = 7.0; ///< |z| below this uses the Maclaurin series
    int asymptotic_terms = 25;  ///< max u_k coefficients per asymptotic branch
    double target_abs_tol = 1e-12;
};

/// Airy function Ai on the real line. Maclaurin series for small |z|,
/// asymptotic expansions beyond (decaying branch for z > cutoff,
/// oscillatory branch for z < -cutoff). Absolute error <= 1e-10 on
/// [-30, 10]; underflows toward 0 for large positive z.
double airy_ai(double z);
double airy_ai(double z, const AiryEvalConfig& cfg);

/// L2-normalized n-th harmonic oscillator eigenfunction at x, computed by
/// the stable three-term recurrence on normalized Hermite functions.
/// Intended range n <= 20; larger n still runs but accuracy is unspecified.
double hermite_psi(int n, double x, double m, double omega, double hbar);

namespace detail {
/// Lanczos approximation of Gamma, local so the Airy constants need no
/// external dependency. Relative error ~1e-14 for positive arguments.
double lanczos_gamma(double x);
} // namespace detail

} // namespace nwp
