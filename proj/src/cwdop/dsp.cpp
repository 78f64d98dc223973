#include "cwdop/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cwdop/fft.hpp"

namespace cwdop {

WindowKind window_kind_from_string(const std::string& name) {
    if (name == "rect" || name == "rectangular") return WindowKind::rectangular;
    if (name == "hann") return WindowKind::hann;
    throw std::domain_error("unknown window kind: " + name);
}

const char* to_string(WindowKind kind) {
    return kind == WindowKind::hann ? "hann" : "rectangular";
}

std::vector<std::complex<double>> remove_dc(std::span<const std::complex<double>> frame) {
    if (frame.empty()) throw std::domain_error("remove_dc: empty frame");
    std::complex<double> mean(0.0, 0.0);
    for (const auto& s : frame) mean += s;
    mean /= static_cast<double>(frame.size());
    std::vector<std::complex<double>> out(frame.begin(), frame.end());
    for (auto& s : out) s -= mean;
    return out;
}

std::vector<std::complex<double>> apply_window(std::span<const std::complex<double>> frame,
                                               WindowKind kind) {
    if (frame.empty()) throw std::domain_error("window: empty frame");
    std::vector<std::complex<double>> out(frame.begin(), frame.end());
    if (kind == WindowKind::rectangular) return out;
    // Periodic Hann; endpoints 0, midpoint 1 for even lengths.
    const double scale = 2.0 * std::numbers::pi / static_cast<double>(frame.size());
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] *= 0.5 * (1.0 - std::cos(scale * static_cast<double>(n)));
    return out;
}

std::vector<std::complex<double>> spectrum(std::span<const std::complex<double>> frame) {
    if (!is_power_of_two(frame.size()))
        throw std::domain_error("spectrum: frame length must be a power of two");
    std::vector<std::complex<double>> out(frame.begin(), frame.end());
    fft_inplace(out);
    fftshift(out);
    return out;
}

VelocitySpectrum velocity_spectrum(std::span<const std::complex<double>> shifted_spectrum,
                                   const RadarConfig& config) {
    ensure_valid(config);
    const auto n = static_cast<std::size_t>(config.frame_len);
    if (shifted_spectrum.size() != n)
        throw std::domain_error("velocity_spectrum: spectrum length must equal frame_len");

    const double lambda = wavelength(config.carrier_freq);
    const double step = lambda * config.adc_rate_sps / (2.0 * static_cast<double>(n));

    VelocitySpectrum vs;
    vs.velocities.resize(n);
    vs.magnitudes.resize(n);
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    for (std::size_t i = 0; i < n; ++i) {
        vs.velocities[i] = static_cast<double>(static_cast<std::ptrdiff_t>(i) - half) * step;
        // v = -f lambda/2 reverses the frequency axis; (n - i) mod n folds the
        // Nyquist bin onto the -v_max label.
        vs.magnitudes[i] = std::abs(shifted_spectrum[(n - i) % n]);
    }
    return vs;
}

namespace {

double median(std::vector<double> values) {
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid),
                     values.end());
    double result = values[mid];
    if (values.size() % 2 == 0) {
        const double below = *std::max_element(
            values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
        result = 0.5 * (result + below);
    }
    return result;
}

}  // namespace

std::optional<PeakDetection> detect_peak(const VelocitySpectrum& vs,
                                         double threshold_factor) {
    if (!(threshold_factor > 0.0))
        throw std::invalid_argument("detect_peak: threshold_factor must be positive");
    if (vs.magnitudes.empty() || vs.magnitudes.size() != vs.velocities.size())
        throw std::invalid_argument("detect_peak: malformed spectrum");

    std::size_t best = 0;
    for (std::size_t i = 1; i < vs.magnitudes.size(); ++i) {
        const bool stronger = vs.magnitudes[i] > vs.magnitudes[best];
        const bool tie_closer = vs.magnitudes[i] == vs.magnitudes[best] &&
                                std::abs(vs.velocities[i]) < std::abs(vs.velocities[best]);
        if (stronger || tie_closer) best = i;
    }

    const double peak = vs.magnitudes[best];
    if (peak <= 0.0) return std::nullopt;  // an all-zero spectrum has no peak
    if (peak < threshold_factor * median(vs.magnitudes)) return std::nullopt;
    return PeakDetection{vs.velocities[best], peak};
}

VelocityMapResult velocity_map(const QuantizedFrames& frames, const RadarConfig& config,
                               WindowKind window, double threshold_factor) {
    ensure_valid(config);
    if (frames.frames.empty()) throw std::domain_error("velocity_map: no frames");

    VelocityMapResult result;
    result.map.rows.reserve(frames.frames.size());
    result.peaks.reserve(frames.frames.size());
    std::vector<std::complex<double>> volts;
    for (std::size_t f = 0; f < frames.frames.size(); ++f) {
        const auto& frame = frames.frames[f];
        if (frame.size() != static_cast<std::size_t>(config.frame_len))
            throw std::domain_error("velocity_map: frame length mismatch");
        volts.clear();
        volts.reserve(frame.size());
        for (const auto& code : frame)
            volts.emplace_back(dequantize_code(code.i, config),
                               dequantize_code(code.q, config));
        auto spec = spectrum(apply_window(remove_dc(volts), window));
        auto vs = velocity_spectrum(spec, config);
        vs.frame_index = f;
        result.peaks.push_back(detect_peak(vs, threshold_factor));
        result.map.rows.push_back(std::move(vs));
    }
    return result;
}

double max_detectable_velocity(const RadarConfig& config) {
    ensure_valid(config);
    return 0.25 * config.adc_rate_sps * wavelength(config.carrier_freq);
}

}  // namespace cwdop
