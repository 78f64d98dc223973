#ifndef CWDOP_DSP_HPP
#define CWDOP_DSP_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cwdop/synth.hpp"

namespace cwdop {

enum class WindowKind { rectangular, hann };

// Accepts "rect", "rectangular", "hann"; anything else is a domain error.
WindowKind window_kind_from_string(const std::string& name);
const char* to_string(WindowKind kind);

// Per-frame magnitude versus signed radial velocity. The axis ascends in
// steps of lambda * f_adc / (2 * frame_len) and spans [-v_max, +v_max); the
// -fs/2 Nyquist bin carries the -v_max label (it aliases +v_max).
struct VelocitySpectrum {
    std::vector<double> velocities;   // m/s
    std::vector<double> magnitudes;   // linear volts
    std::size_t frame_index = 0;
};

struct PeakDetection {
    double velocity_mps = 0.0;
    double magnitude = 0.0;
};

// Time-ordered stack of per-frame spectra (the 2D velocity map).
struct VelocityMap {
    std::vector<VelocitySpectrum> rows;
};

struct VelocityMapResult {
    VelocityMap map;
    std::vector<std::optional<PeakDetection>> peaks;  // one entry per row
};

// Subtracts the complex mean. Suppresses stationary returns so that dwelling
// targets render as no-detection gaps.
std::vector<std::complex<double>> remove_dc(std::span<const std::complex<double>> frame);

std::vector<std::complex<double>> apply_window(std::span<const std::complex<double>> frame,
                                               WindowKind kind);

// Forward DFT with bins rotated so index 0 is -fs/2 (fftshift order).
// Length must be a power of two.
std::vector<std::complex<double>> spectrum(std::span<const std::complex<double>> frame);

// Maps the shifted spectrum onto the signed velocity axis via v = -f lambda/2
// (the pairing of the synthesizer's phase sign: departing targets positive).
VelocitySpectrum velocity_spectrum(std::span<const std::complex<double>> shifted_spectrum,
                                   const RadarConfig& config);

// Argmax bin if its magnitude is at least threshold_factor times the median
// magnitude and positive; otherwise nothing. Magnitude ties prefer smaller
// |v|, and the negative bin when |v| also ties (ascending scan keeps the
// first winner).
std::optional<PeakDetection> detect_peak(const VelocitySpectrum& spectrum,
                                         double threshold_factor);

// Full receive pipeline per frame: dequantize, remove DC, window, FFT,
// velocity mapping, peak detection; rows stacked time-ordered.
VelocityMapResult velocity_map(const QuantizedFrames& frames, const RadarConfig& config,
                               WindowKind window, double threshold_factor);

// Aliasing limit: f_adc * lambda / 4.
double max_detectable_velocity(const RadarConfig& config);

}  // namespace cwdop

#endif
