#pragma once

#include <complex>
#include <vector>

namespace nwp::fft {

// In-place complex DFT, unnormalized forward / 1/n-normalized inverse.
// Size must be a power of two (enforced by the grid layer).
// Plan creation is serialized internally; execution is thread-safe, so
// concurrent transforms on distinct buffers are fine.
void forward(std::vector<std::complex<double>>& a);
void inverse(std::vector<std::complex<double>>& a);

} // namespace nwp::fft
