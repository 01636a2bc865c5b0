#include "nwp/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace nwp::fft {
namespace {

std::mutex plan_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan> plan_cache;

fftw_plan get_plan(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;
    // FFTW_UNALIGNED lets the plan run on any caller buffer via the
    // new-array interface; FFTW_ESTIMATE keeps planning deterministic.
    std::vector<std::complex<double>> scratch(n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), p, p, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan) throw std::runtime_error("fftw plan creation failed");
    plan_cache.emplace(key, plan);
    return plan;
}

} // namespace

void forward(std::vector<std::complex<double>>& a) {
    auto* p = reinterpret_cast<fftw_complex*>(a.data());
    fftw_execute_dft(get_plan(a.size(), FFTW_FORWARD), p, p);
}

void inverse(std::vector<std::complex<double>>& a) {
    auto* p = reinterpret_cast<fftw_complex*>(a.data());
    fftw_execute_dft(get_plan(a.size(), FFTW_BACKWARD), p, p);
    const double scale = 1.0 / static_cast<double>(a.size());
    for (auto& v : a) v *= scale;
}

} // namespace nwp::fft
