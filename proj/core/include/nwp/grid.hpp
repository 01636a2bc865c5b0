#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace nwp {

/// Uniform half-open spatial grid [x_min, x_max) with its conjugate
/// wavenumber lattice. n is a power of two so the transforms stay radix-2
/// and the wavenumber ordering is the standard unambiguous one.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t n = 0;
    double dx = 0.0;

    double length() const { return x_max - x_min; }
    double x(std::size_t j) const { return x_min + static_cast<double>(j) * dx; }
    double k_spacing() const;
    /// Wavenumber of bin j in DFT order: 0..n/2-1 positive, then negative.
    double k(std::size_t j) const;
    std::vector<double> k_samples() const;

    bool operator==(const Grid1D&) const = default;
};

Grid1D make_grid(double x_min, double x_max, std::size_t n);

/// Complex field sampled on a grid at one instant.
struct WaveField {
    Grid1D grid;
    std::vector<std::complex<double>> samples;
    double t = 0.0;
};

WaveField make_field(const Grid1D& grid, double t = 0.0);

/// Throws if the samples/grid sizes disagree or any sample is non-finite.
void validate_field(const WaveField& f);

/// Closed interval [lo, hi] inside the grid, used to restrict norms and
/// residuals to the region where a truncated packet is trustworthy.
struct Window {
    double lo = 0.0;
    double hi = 0.0;
};

void validate_window(const Window& w, const Grid1D& grid);

/// Window spanning the grid minus a margin fraction on each side.
Window inner_window(const Grid1D& grid, double margin_fraction);

double l2_norm(const WaveField& f, const std::optional<Window>& w = std::nullopt);

double centroid(const WaveField& f, const std::optional<Window>& w = std::nullopt);

/// Location of the global maximum of |f|^2, refined by parabolic
/// interpolation through the three samples around the discrete argmax.
double mode_position(const WaveField& f);

/// Same refinement but restricted to the local maximum nearest `guess`;
/// used by trajectory trackers to follow one lobe of a multi-lobed packet.
double mode_position_near(const WaveField& f, double guess);

/// Spectral (periodic) shift: samples approximate f(x - d). Exact for
/// band-limited data up to roundoff; wrap-around at the boundary is the
/// caller's hazard to manage, not an error.
WaveField spatial_shift(const WaveField& f, double d);

/// Pointwise product with a mask of values in [0, 1].
WaveField apply_mask(const WaveField& f, const std::vector<double>& mask);

/// Smooth apodization mask: exactly 1 in the interior, rolling off to 0
/// across the outer `fraction` of the grid on each side. The ramp is an
/// erf profile; the outer tail of a packet must be taken smoothly to zero
/// before any spectral operation or the boundary jump pollutes the interior.
std::vector<double> taper_mask(const Grid1D& grid, double fraction);

/// Fraction of total |f|^2 mass lying within margin_fraction of either edge.
double boundary_fraction(const WaveField& f, double margin_fraction);

} // namespace nwp
