#include "nwp/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace nwp {

namespace detail {

double lanczos_gamma(double x) {
    // g = 7, 9-term coefficient set.
    static constexpr double coef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,       -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        // reflection for the left half-plane
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
    }
    x -= 1.0;
    double a = coef[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += coef[i] / (x + static_cast<double>(i));
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

} // namespace detail

namespace {

struct AiryConstants {
    long double c1; // Ai(0)  = 3^(-2/3) / Gamma(2/3)
    long double c2; // -Ai'(0) = 3^(-1/3) / Gamma(1/3)
};

const AiryConstants& airy_constants() {
    static const AiryConstants c = [] {
        AiryConstants k;
        k.c1 = static_cast<long double>(std::pow(3.0, -2.0 / 3.0) /
                                        detail::lanczos_gamma(2.0 / 3.0));
        k.c2 = static_cast<long double>(std::pow(3.0, -1.0 / 3.0) /
                                        detail::lanczos_gamma(1.0 / 3.0));
        return k;
    }();
    return c;
}

// Compensated sum of the stored terms, largest magnitude first. Extended
// precision plus compensation keeps the pointwise noise far below the
// cancellation scale of the alternating series.
long double kahan_sum_descending(std::vector<long double>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](long double a, long double b) { return std::fabs(a) > std::fabs(b); });
    long double sum = 0.0L, comp = 0.0L;
    for (long double t : terms) {
        const long double y = t - comp;
        const long double u = sum + y;
        comp = (u - sum) - y;
        sum = u;
    }
    return sum;
}

// Ai(z) = c1*f(z) - c2*g(z) with
//   f = sum z^{3k} / ((3k)!/(3^k (1/3)_k)),  g = sum z^{3k+1} / (...)
// realized through the term recurrences
//   a_{k+1} = a_k z^3 / ((3k+2)(3k+3)),  b_{k+1} = b_k z^3 / ((3k+3)(3k+4)).
long double airy_series(long double z, double abs_tol) {
    const long double z3 = z * z * z;
    std::vector<long double> terms;
    terms.reserve(64);
    const auto& c = airy_constants();
    long double a = c.c1;      // c1 * 1
    long double b = -c.c2 * z; // -c2 * z
    for (int k = 0; k < 200; ++k) {
        terms.push_back(a);
        terms.push_back(b);
        const long double d3k = 3.0L * k;
        a *= z3 / ((d3k + 2.0L) * (d3k + 3.0L));
        b *= z3 / ((d3k + 3.0L) * (d3k + 4.0L));
        if (std::fabs(a) + std::fabs(b) < static_cast<long double>(abs_tol) * 1e-4L &&
            k > 2)
            break;
    }
    return kahan_sum_descending(terms);
}

// u_k coefficients of the asymptotic expansions: u_0 = 1,
// u_k = u_{k-1} (6k-5)(6k-1) / (72 k).
long double next_u(long double u, int k) {
    const long double kk = static_cast<long double>(k);
    return u * (6.0L * kk - 5.0L) * (6.0L * kk - 1.0L) / (72.0L * kk);
}

// Decaying branch, z > 0:  Ai(z) ~ e^{-xi} / (2 sqrt(pi) z^{1/4}) * sum (-1)^k u_k xi^{-k}
long double airy_asymptotic_pos(long double z, const AiryEvalConfig& cfg) {
    const long double xi = (2.0L / 3.0L) * z * std::sqrt(z);
    long double sum = 0.0L, u = 1.0L, term = 1.0L, prev = 1e30L;
    for (int k = 0; k < cfg.asymptotic_terms; ++k) {
        if (std::fabs(term) > prev) break; // divergent tail reached
        sum += (k % 2 == 0) ? term : -term;
        prev = std::fabs(term);
        u = next_u(u, k + 1);
        term = u / std::pow(xi, static_cast<long double>(k + 1));
    }
    const long double pref =
        std::exp(-xi) / (2.0L * std::sqrt(std::numbers::pi_v<long double>) * std::pow(z, 0.25L));
    return pref * sum;
}

// Oscillatory branch, z < 0 (argument x = -z > 0):
//   Ai(-x) ~ (cos(xi - pi/4) S_even + sin(xi - pi/4) S_odd) / (sqrt(pi) x^{1/4})
//   S_even = sum (-1)^k u_{2k} xi^{-2k},  S_odd = sum (-1)^k u_{2k+1} xi^{-2k-1}
long double airy_asymptotic_neg(long double x, const AiryEvalConfig& cfg) {
    const long double xi = (2.0L / 3.0L) * x * std::sqrt(x);
    long double s_even = 0.0L, s_odd = 0.0L;
    long double u = 1.0L, prev = 1e30L;
    for (int k = 0; k < cfg.asymptotic_terms; ++k) {
        const long double term = u / std::pow(xi, static_cast<long double>(k));
        if (std::fabs(term) > prev) break;
        prev = std::fabs(term);
        const int pair = k / 2;
        const long double s = (pair % 2 == 0) ? term : -term;
        if (k % 2 == 0)
            s_even += s;
        else
            s_odd += s;
        u = next_u(u, k + 1);
    }
    const long double phase = xi - std::numbers::pi_v<long double> / 4.0L;
    const long double pref =
        1.0L / (std::sqrt(std::numbers::pi_v<long double>) * std::pow(x, 0.25L));
    return pref * (std::cos(phase) * s_even + std::sin(phase) * s_odd);
}

} // namespace

double airy_ai(double z, const AiryEvalConfig& cfg) {
    if (!std::isfinite(z)) throw std::invalid_argument("airy_ai: non-finite argument");
    if (!(cfg.series_cutoff > 0.0) || cfg.asymptotic_terms < 1)
        throw std::invalid_argument("airy_ai: bad evaluation config");
    const auto zl = static_cast<long double>(z);
    if (std::fabs(z) <= cfg.series_cutoff)
        return static_cast<double>(airy_series(zl, cfg.target_abs_tol));
    if (z > 0.0) return static_cast<double>(airy_asymptotic_pos(zl, cfg));
    return static_cast<double>(airy_asymptotic_neg(-zl, cfg));
}

double airy_ai(double z) { return airy_ai(z, AiryEvalConfig{}); }

double hermite_psi(int n, double x, double m, double omega, double hbar) {
    if (n < 0) throw std::invalid_argument("hermite_psi: negative level");
    if (!(m > 0.0) || !(omega > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("hermite_psi: physical constants must be positive");
    const long double scale = std::sqrt(static_cast<long double>(m) *
                                         static_cast<long double>(omega) /
                                         static_cast<long double>(hbar));
    const long double xi = scale * static_cast<long double>(x);
    // h_0 = pi^{-1/4} e^{-xi^2/2}; h_{j+1} = sqrt(2/(j+1)) xi h_j - sqrt(j/(j+1)) h_{j-1}
    const long double pi_l = std::numbers::pi_v<long double>;
    long double h_prev = 0.0L;
    long double h = std::pow(pi_l, -0.25L) * std::exp(-0.5L * xi * xi);
    for (int j = 0; j < n; ++j) {
        const long double jj = static_cast<long double>(j);
        const long double h_next =
            std::sqrt(2.0L / (jj + 1.0L)) * xi * h - std::sqrt(jj / (jj + 1.0L)) * h_prev;
        h_prev = h;
        h = h_next;
    }
    return static_cast<double>(std::sqrt(scale) * h);
}

} // namespace nwp
