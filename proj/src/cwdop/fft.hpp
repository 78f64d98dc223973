#ifndef CWDOP_FFT_HPP
#define CWDOP_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace cwdop {

bool is_power_of_two(std::size_t n);

// In-place iterative radix-2 forward DFT, unnormalized
// (X[k] = sum_n x[n] exp(-j 2 pi k n / N)). Size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& data);

std::vector<std::complex<double>> fft(std::vector<std::complex<double>> data);

// Rotate so index 0 holds the -fs/2 bin. Even sizes only.
void fftshift(std::vector<std::complex<double>>& data);

}  // namespace cwdop

#endif
