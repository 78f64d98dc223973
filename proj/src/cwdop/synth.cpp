#include "cwdop/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cwdop/link_budget.hpp"
#include "cwdop/noise.hpp"
#include "cwdop/trajectory.hpp"

namespace cwdop {

double quant_step(const RadarConfig& c) {
    return 2.0 * c.adc_full_scale / std::pow(2.0, c.adc_bits);
}

double amplitude_volts_from_dbm(double power_dbm, double baseband_gain) {
    // dBm -> watts -> peak volts of a sinusoid into 50 ohms, then the
    // baseband chain gain. Noise uses the same mapping so the sample-domain
    // SNR equals the link-budget SNR.
    const double watts = std::pow(10.0, (power_dbm - 30.0) / 10.0);
    return baseband_gain * std::sqrt(2.0 * watts * 50.0);
}

double dequantize_code(std::int32_t code, const RadarConfig& c) {
    return static_cast<double>(code) * quant_step(c);
}

IQStream synthesize_if(const Trajectory& traj, const RadarConfig& config,
                       std::uint64_t noise_seed, bool include_noise) {
    const auto n = static_cast<std::size_t>(
        std::floor(traj.duration_s() * config.adc_rate_sps));
    return synthesize_if(traj, config, noise_seed, include_noise, n);
}

IQStream synthesize_if(const Trajectory& traj, const RadarConfig& config,
                       std::uint64_t noise_seed, bool include_noise,
                       std::size_t n_samples) {
    ensure_valid(config);
    if (n_samples < static_cast<std::size_t>(config.frame_len))
        throw std::domain_error("synthesize_if: trajectory shorter than one frame");
    const double dt = 1.0 / config.adc_rate_sps;
    if (static_cast<double>(n_samples - 1) * dt > traj.duration_s())
        throw std::domain_error("synthesize_if: requested samples exceed trajectory duration");

    const double lambda = wavelength(config.carrier_freq);
    const double phase_scale = -4.0 * std::numbers::pi / lambda;
    LinkBudgetParams link = link_params_from_config(config, 1.0);
    const double floor_dbm =
        noise_floor_dbm(config.noise_figure_db, config.rx_bandwidth_hz);
    // Complex-envelope noise power E|w|^2 under the same volts convention as
    // the signal (|z|^2 = 100 * watts * gain^2); each quadrature carries half.
    const double noise_power_v2 =
        include_noise
            ? std::pow(amplitude_volts_from_dbm(floor_dbm, config.baseband_gain), 2)
            : 0.0;
    const double sigma_quadrature = std::sqrt(noise_power_v2 / 2.0);
    const CounterGaussian gauss(noise_seed);

    IQStream out;
    out.sample_rate_sps = config.adc_rate_sps;
    out.t0_s = 0.0;
    out.samples.reserve(n_samples);
    for (std::size_t n = 0; n < n_samples; ++n) {
        const double t = static_cast<double>(n) * dt;
        const double range = traj.at(t).range_m;
        link.range_m = range;
        const double amp = amplitude_volts_from_dbm(received_power_dbm(link),
                                                    config.baseband_gain);
        const double phase = phase_scale * range;
        std::complex<double> sample(amp * std::cos(phase), amp * std::sin(phase));
        if (include_noise) {
            const auto [g_i, g_q] = gauss.at(n);
            sample += std::complex<double>(sigma_quadrature * g_i,
                                           sigma_quadrature * g_q);
        }
        out.samples.push_back(sample);
    }
    return out;
}

QuantizedFrames quantize(const IQStream& stream, const RadarConfig& config) {
    ensure_valid(config);
    if (stream.sample_rate_sps != config.adc_rate_sps)
        throw std::invalid_argument("quantize: stream rate does not match adc_rate_sps");

    const double step = quant_step(config);
    const std::int64_t code_max = (std::int64_t{1} << (config.adc_bits - 1)) - 1;
    const std::int64_t code_min = -(std::int64_t{1} << (config.adc_bits - 1));

    QuantizedFrames out;
    out.config = config;
    auto to_code = [&](double x) {
        const double scaled = std::round(x / step);
        if (scaled > static_cast<double>(code_max)) {
            ++out.clip_count;
            return static_cast<std::int32_t>(code_max);
        }
        if (scaled < static_cast<double>(code_min)) {
            ++out.clip_count;
            return static_cast<std::int32_t>(code_min);
        }
        return static_cast<std::int32_t>(scaled);
    };

    const auto frame_len = static_cast<std::size_t>(config.frame_len);
    const std::size_t n_frames = stream.samples.size() / frame_len;
    out.frames.reserve(n_frames);
    for (std::size_t f = 0; f < n_frames; ++f) {
        IQFrame frame;
        frame.reserve(frame_len);
        for (std::size_t k = 0; k < frame_len; ++k) {
            const auto& s = stream.samples[f * frame_len + k];
            frame.push_back({to_code(s.real()), to_code(s.imag())});
        }
        out.frames.push_back(std::move(frame));
    }
    return out;
}

}  // namespace cwdop
