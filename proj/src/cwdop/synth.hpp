#ifndef CWDOP_SYNTH_HPP
#define CWDOP_SYNTH_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "cwdop/radar_config.hpp"

namespace cwdop {

class Trajectory;

// Complex baseband IF samples, in volts at the ADC input.
struct IQStream {
    std::vector<std::complex<double>> samples;
    double sample_rate_sps = 0.0;
    double t0_s = 0.0;
};

struct IQCode {
    std::int32_t i = 0;
    std::int32_t q = 0;
};

using IQFrame = std::vector<IQCode>;

// ADC output grouped into fixed-length frames, plus the config that produced
// the codes. clip_count reports saturated I or Q samples.
struct QuantizedFrames {
    std::vector<IQFrame> frames;
    RadarConfig config;
    std::size_t clip_count = 0;
};

// ADC step: full scale maps to the signed code range, mid-tread.
double quant_step(const RadarConfig& config);

// Peak voltage of a sinusoid carrying `power_dbm` into 50 ohms, after the
// baseband voltage gain.
double amplitude_volts_from_dbm(double power_dbm, double baseband_gain);

double dequantize_code(std::int32_t code, const RadarConfig& config);

// Forward model. Sample n at t = n / adc_rate is
//     A(R(t)) * exp(-j 4 pi R(t) / lambda) + w_n
// where A comes from the radar-equation received power at the instantaneous
// range and w_n is complex white Gaussian noise at the thermal floor,
// generated per-sample from noise_seed. The phase sign is chosen so an
// approaching target (dR/dt < 0) produces a positive IF frequency; the DSP's
// v = -f lambda / 2 mapping undoes it, keeping departing targets positive.
// The default overload covers the whole trajectory (floor(duration * rate)
// samples); it throws std::domain_error if that is less than one frame.
IQStream synthesize_if(const Trajectory& traj, const RadarConfig& config,
                       std::uint64_t noise_seed, bool include_noise);
IQStream synthesize_if(const Trajectory& traj, const RadarConfig& config,
                       std::uint64_t noise_seed, bool include_noise,
                       std::size_t n_samples);

// Mid-tread uniform quantization of I and Q independently, saturating at the
// code range; consecutive frame_len groups, trailing partial frame dropped.
QuantizedFrames quantize(const IQStream& stream, const RadarConfig& config);

}  // namespace cwdop

#endif
