#include "anisoheat/fft.hpp"

#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace anisoheat {

namespace {
std::mutex plan_mutex; // FFTW planning is not thread-safe
}

void fft_nd(std::vector<std::complex<double>>& data, const std::vector<int>& shape, int sign) {
    long total = 1;
    for (int n : shape) total *= n;
    if (static_cast<long>(data.size()) != total)
        throw std::invalid_argument("fft_nd: shape/size mismatch");
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft(static_cast<int>(shape.size()), shape.data(), ptr, ptr,
                             sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("fft_nd: planning failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
}

} // namespace anisoheat
