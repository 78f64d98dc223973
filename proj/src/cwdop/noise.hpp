#ifndef CWDOP_NOISE_HPP
#define CWDOP_NOISE_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace cwdop {

// splitmix64 finalizer; full avalanche on 64 bits.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based unit Gaussian source: the pair of deviates for sample n is a
// pure function of (seed, n), so samples can be generated in any order or in
// parallel and still match a sequential run bit for bit.
class CounterGaussian {
public:
    explicit CounterGaussian(std::uint64_t seed)
        : base_(mix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

    // Independent standard-normal pair for sample index n (Box-Muller).
    std::pair<double, double> at(std::uint64_t n) const {
        const std::uint64_t h1 = mix64(base_ ^ (n * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
        const std::uint64_t h2 = mix64(h1 ^ 0xd6e8feb86659fd93ULL);
        const double u1 = static_cast<double>((h1 >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = static_cast<double>(h2 >> 11) * 0x1.0p-53;        // [0, 1)
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    std::uint64_t base_;
};

}  // namespace cwdop

#endif
