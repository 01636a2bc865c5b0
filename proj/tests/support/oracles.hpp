#pragma once

// Test-only reference implementations, independent of the library code
// paths they are used to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace oracles {

// ---------------------------------------------------------------------------
// Airy Ai by brute force.
// ---------------------------------------------------------------------------

// Maclaurin series in extended precision. Constants from libm's tgamma,
// deliberately not the library's local Lanczos route. Also returns the
// derivative so the ODE marcher below can be anchored.
inline std::pair<long double, long double> ai_series_with_derivative(long double z) {
    const long double c1 = std::pow(3.0L, -2.0L / 3.0L) / std::tgamma(2.0L / 3.0L);
    const long double c2 = std::pow(3.0L, -1.0L / 3.0L) / std::tgamma(1.0L / 3.0L);
    const long double z3 = z * z * z;
    long double f = 0.0L, g = 0.0L, fp = 0.0L, gp = 1.0L; // g' leading term is 1
    long double a = 1.0L, b = z;
    for (int k = 0; k < 400; ++k) {
        f += a;
        g += b;
        if (k > 0 && z != 0.0L) {
            fp += a * (3.0L * k) / z;
            gp += b * (3.0L * k) / z; // d/dz z^{3k+1} = (3k+1) z^{3k}; the +1 part is in gp's seed
        }
        const long double d3k = 3.0L * static_cast<long double>(k);
        a *= z3 / ((d3k + 2.0L) * (d3k + 3.0L));
        b *= z3 / ((d3k + 3.0L) * (d3k + 4.0L));
        if (k > 3 && std::fabs(a) + std::fabs(b) < 1e-30L) break;
    }
    return {c1 * f - c2 * g, c1 * fp - c2 * gp};
}

inline double ai_series(double z) {
    return static_cast<double>(ai_series_with_derivative(static_cast<long double>(z)).first);
}

// March y'' = z y with RK4 from (z0, y, y') and report y at every multiple
// of `report_step` encountered. Direction follows the sign of h.
inline std::vector<std::pair<double, double>>
ai_ode_march(long double z0, long double y, long double yp, long double z1, long double h,
             double report_step) {
    std::vector<std::pair<double, double>> out;
    auto rhs = [](long double z, long double yv, long double ypv) {
        return std::pair{ypv, z * yv};
    };
    long double z = z0;
    const auto steps = static_cast<std::int64_t>(std::llround((z1 - z0) / h));
    std::int64_t next_report = static_cast<std::int64_t>(std::ceill(
        static_cast<long double>(std::min(static_cast<double>(z0), static_cast<double>(z1))) /
        report_step));
    (void)next_report;
    for (std::int64_t s = 0; s < steps; ++s) {
        const auto [k1y, k1p] = rhs(z, y, yp);
        const auto [k2y, k2p] = rhs(z + 0.5L * h, y + 0.5L * h * k1y, yp + 0.5L * h * k1p);
        const auto [k3y, k3p] = rhs(z + 0.5L * h, y + 0.5L * h * k2y, yp + 0.5L * h * k2p);
        const auto [k4y, k4p] = rhs(z + h, y + h * k3y, yp + h * k3p);
        y += h / 6.0L * (k1y + 2.0L * (k2y + k3y) + k4y);
        yp += h / 6.0L * (k1p + 2.0L * (k2p + k3p) + k4p);
        z = z0 + h * static_cast<long double>(s + 1);
        const double zd = static_cast<double>(z);
        const double r = zd / report_step;
        if (std::fabs(r - std::round(r)) < 1e-9)
            out.emplace_back(report_step * std::round(r), static_cast<double>(y));
    }
    return out;
}

// Positive-axis Ai through the modified-Bessel integral
//   Ai(z) = sqrt(z/3)/pi * K_{1/3}(zeta),  zeta = (2/3) z^{3/2},
//   K_{1/3}(zeta) = int_0^inf exp(-zeta cosh t) cosh(t/3) dt.
// The integrand is positive, so there is no cancellation; composite Simpson
// in extended precision is accurate to ~1e-14 relative for zeta >~ 1.
inline double ai_bessel_integral(double zd) {
    const long double z = zd;
    const long double zeta = (2.0L / 3.0L) * z * std::sqrt(z);
    const long double T = std::acosh(120.0L / zeta + 1.0L);
    const int n = 1 << 15;
    const long double h = T / n;
    auto f = [&](long double t) {
        return std::exp(-zeta * std::cosh(t)) * std::cosh(t / 3.0L);
    };
    long double acc = f(0.0L) + f(T);
    for (int i = 1; i < n; ++i) acc += f(h * i) * ((i % 2 == 1) ? 4.0L : 2.0L);
    const long double K = acc * h / 3.0L;
    const long double pi = 3.14159265358979323846264338327950288L;
    return static_cast<double>(std::sqrt(z / 3.0L) / pi * K);
}

// First negative zero of Ai located by bisection on the series.
inline double ai_first_zero() {
    double lo = -2.5, hi = -2.2; // series: Ai(-2.5) < 0 < Ai(-2.2)
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ai_series(lo) * ai_series(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Dense-grid argmax of Ai^2 with parabolic refinement; the packet's main
// lobe sits at the first maximum on the negative axis.
inline double ai_mode_brute_force() {
    const double lo = -2.0, hi = 0.0, step = 1e-5;
    double best_z = lo;
    double best_v = -1.0;
    const auto count = static_cast<std::int64_t>((hi - lo) / step);
    for (std::int64_t i = 0; i <= count; ++i) {
        const double z = lo + step * static_cast<double>(i);
        const double v = ai_series(z);
        if (v * v > best_v) {
            best_v = v * v;
            best_z = z;
        }
    }
    const double ym = std::pow(ai_series(best_z - step), 2);
    const double y0 = std::pow(ai_series(best_z), 2);
    const double yp = std::pow(ai_series(best_z + step), 2);
    return best_z + 0.5 * step * (ym - yp) / (ym - 2.0 * y0 + yp);
}

// ---------------------------------------------------------------------------
// Misc closed forms and helpers.
// ---------------------------------------------------------------------------

// Free evolution of exp(-x^2/2) with hbar = m = 1.
inline std::complex<double> free_gaussian(double x, double t) {
    const std::complex<double> s(1.0, t);
    return std::exp(-x * x / (2.0 * s)) / std::sqrt(s);
}

// Small deterministic LCG for reproducible "random" test inputs.
struct Lcg {
    std::uint64_t state = 0x243f6a8885a308d3ULL;
    double next() { // uniform in [0, 1)
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }
    double range(double lo, double hi) { return lo + (hi - lo) * next(); }
};

} // namespace oracles
