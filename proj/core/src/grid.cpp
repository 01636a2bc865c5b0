#include "nwp/grid.hpp"

#include "nwp/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nwp {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
} // namespace

double Grid1D::k_spacing() const { return two_pi / (static_cast<double>(n) * dx); }

double Grid1D::k(std::size_t j) const {
    const double dk = k_spacing();
    return j < n / 2 ? static_cast<double>(j) * dk
                     : (static_cast<double>(j) - static_cast<double>(n)) * dk;
}

std::vector<double> Grid1D::k_samples() const {
    std::vector<double> ks(n);
    for (std::size_t j = 0; j < n; ++j) ks[j] = k(j);
    return ks;
}

Grid1D make_grid(double x_min, double x_max, std::size_t n) {
    if (!(x_max > x_min)) throw std::invalid_argument("make_grid: x_max must exceed x_min");
    if (n < 16 || !is_pow2(n))
        throw std::invalid_argument("make_grid: n must be a power of two >= 16");
    Grid1D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.n = n;
    g.dx = (x_max - x_min) / static_cast<double>(n);
    return g;
}

WaveField make_field(const Grid1D& grid, double t) {
    WaveField f;
    f.grid = grid;
    f.samples.assign(grid.n, {0.0, 0.0});
    f.t = t;
    return f;
}

void validate_field(const WaveField& f) {
    if (f.samples.size() != f.grid.n)
        throw std::invalid_argument("wave field: sample count does not match grid");
    for (const auto& v : f.samples)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("wave field: non-finite sample");
}

void validate_window(const Window& w, const Grid1D& grid) {
    if (!(w.lo < w.hi)) throw std::invalid_argument("window: lo must be below hi");
    if (w.lo < grid.x_min || w.hi > grid.x_max)
        throw std::invalid_argument("window: outside grid");
}

Window inner_window(const Grid1D& grid, double margin_fraction) {
    const double m = margin_fraction * grid.length();
    return Window{grid.x_min + m, grid.x_max - m};
}

namespace {

// Index range [lo, hi] of samples inside the window (whole grid if absent).
std::pair<std::size_t, std::size_t> window_range(const WaveField& f,
                                                 const std::optional<Window>& w) {
    if (!w) return {0, f.grid.n - 1};
    validate_window(*w, f.grid);
    const auto& g = f.grid;
    auto lo = static_cast<std::size_t>(std::max(0.0, std::ceil((w->lo - g.x_min) / g.dx)));
    auto hi_d = std::floor((w->hi - g.x_min) / g.dx);
    if (hi_d < static_cast<double>(lo))
        throw std::invalid_argument("window: contains no grid samples");
    auto hi = std::min(g.n - 1, static_cast<std::size_t>(hi_d));
    if (lo > hi) throw std::invalid_argument("window: contains no grid samples");
    return {lo, hi};
}

} // namespace

double l2_norm(const WaveField& f, const std::optional<Window>& w) {
    auto [lo, hi] = window_range(f, w);
    double acc = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) acc += std::norm(f.samples[j]);
    return std::sqrt(acc * f.grid.dx);
}

double centroid(const WaveField& f, const std::optional<Window>& w) {
    auto [lo, hi] = window_range(f, w);
    double mass = 0.0, moment = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) {
        const double p = std::norm(f.samples[j]);
        mass += p;
        moment += f.grid.x(j) * p;
    }
    if (mass <= 0.0) throw std::domain_error("centroid: zero norm on window");
    return moment / mass;
}

namespace {

double refine_peak(const WaveField& f, std::size_t j) {
    if (j == 0 || j + 1 >= f.grid.n) return f.grid.x(j);
    const double ym = std::norm(f.samples[j - 1]);
    const double y0 = std::norm(f.samples[j]);
    const double yp = std::norm(f.samples[j + 1]);
    const double denom = ym - 2.0 * y0 + yp;
    if (denom >= 0.0) return f.grid.x(j); // flat or degenerate, no refinement
    return f.grid.x(j) + 0.5 * f.grid.dx * (ym - yp) / denom;
}

} // namespace

double mode_position(const WaveField& f) {
    std::size_t best = 0;
    double best_v = 0.0;
    for (std::size_t j = 0; j < f.grid.n; ++j) {
        const double v = std::norm(f.samples[j]);
        if (v > best_v) {
            best_v = v;
            best = j;
        }
    }
    if (best_v == 0.0) throw std::domain_error("mode_position: all-zero field");
    return refine_peak(f, best);
}

double mode_position_near(const WaveField& f, double guess) {
    std::size_t best = f.grid.n;
    double best_dist = 0.0;
    for (std::size_t j = 1; j + 1 < f.grid.n; ++j) {
        const double y0 = std::norm(f.samples[j]);
        if (y0 == 0.0) continue;
        if (y0 >= std::norm(f.samples[j - 1]) && y0 > std::norm(f.samples[j + 1])) {
            const double dist = std::abs(f.grid.x(j) - guess);
            if (best == f.grid.n || dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
    }
    if (best == f.grid.n) return mode_position(f);
    return refine_peak(f, best);
}

WaveField spatial_shift(const WaveField& f, double d) {
    WaveField out = f;
    fft::forward(out.samples);
    const std::size_t n = f.grid.n;
    for (std::size_t j = 0; j < n; ++j) {
        const double kd = f.grid.k(j) * d;
        out.samples[j] *= std::complex<double>(std::cos(kd), -std::sin(kd));
    }
    fft::inverse(out.samples);
    return out;
}

WaveField apply_mask(const WaveField& f, const std::vector<double>& mask) {
    if (mask.size() != f.grid.n)
        throw std::invalid_argument("apply_mask: mask length does not match grid");
    for (double m : mask)
        if (!(m >= 0.0 && m <= 1.0))
            throw std::invalid_argument("apply_mask: mask value outside [0,1]");
    WaveField out = f;
    for (std::size_t j = 0; j < f.grid.n; ++j) out.samples[j] *= mask[j];
    return out;
}

namespace {

// erf ramp from exactly 0 at s=0 to exactly 1 at s=1, flat (to ~1e-7 in
// slope) at both junctions so the mask's spectrum rolls off fast enough
// to keep shift and derivative errors near roundoff.
double erf_ramp(double s) {
    constexpr double a = 4.0;
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    const double lo = 0.5 * (1.0 + std::erf(-a));
    const double hi = 0.5 * (1.0 + std::erf(a));
    const double raw = 0.5 * (1.0 + std::erf(a * (2.0 * s - 1.0)));
    return (raw - lo) / (hi - lo);
}

} // namespace

std::vector<double> taper_mask(const Grid1D& grid, double fraction) {
    if (!(fraction > 0.0 && fraction < 0.5))
        throw std::invalid_argument("taper_mask: fraction must be in (0, 0.5)");
    const double width = fraction * grid.length();
    std::vector<double> mask(grid.n);
    const double x_last = grid.x(grid.n - 1);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double x = grid.x(j);
        mask[j] = erf_ramp((x - grid.x_min) / width) * erf_ramp((x_last - x) / width);
    }
    return mask;
}

double boundary_fraction(const WaveField& f, double margin_fraction) {
    const double margin = margin_fraction * f.grid.length();
    double total = 0.0, edge = 0.0;
    for (std::size_t j = 0; j < f.grid.n; ++j) {
        const double p = std::norm(f.samples[j]);
        total += p;
        const double x = f.grid.x(j);
        if (x < f.grid.x_min + margin || x > f.grid.x_max - margin) edge += p;
    }
    return total > 0.0 ? edge / total : 0.0;
}

} // namespace nwp
