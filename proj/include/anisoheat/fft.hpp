#pragma once

#include <complex>
#include <vector>

namespace anisoheat {

// In-place complex DFT on a dense row-major array of the given shape.
// sign = -1: forward (e^{-2 pi i jk/N}), sign = +1: backward, unnormalized.
void fft_nd(std::vector<std::complex<double>>& data, const std::vector<int>& shape, int sign);

inline int next_pow2(long n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace anisoheat
