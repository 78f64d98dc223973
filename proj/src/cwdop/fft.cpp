#include "cwdop/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cwdop {

bool is_power_of_two(std::size_t n) {
    return n > 0 && (n & (n - 1)) == 0;
}

void fft_inplace(std::vector<std::complex<double>>& data) {
    const std::size_t n = data.size();
    if (!is_power_of_two(n))
        throw std::domain_error("fft: size must be a power of two");
    if (n == 1) return;

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (std::size_t start = 0; start < n; start += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto even = data[start + k];
                const auto odd = data[start + k + len / 2] * w;
                data[start + k] = even + odd;
                data[start + k + len / 2] = even - odd;
                w *= wlen;
            }
        }
    }
}

std::vector<std::complex<double>> fft(std::vector<std::complex<double>> data) {
    fft_inplace(data);
    return data;
}

void fftshift(std::vector<std::complex<double>>& data) {
    if (data.size() % 2 != 0)
        throw std::domain_error("fftshift: size must be even");
    std::rotate(data.begin(), data.begin() + static_cast<std::ptrdiff_t>(data.size() / 2),
                data.end());
}

}  // namespace cwdop
