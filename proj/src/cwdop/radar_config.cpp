#include "cwdop/radar_config.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cwdop {

double wavelength(double carrier_freq_hz) {
    if (!std::isfinite(carrier_freq_hz) || carrier_freq_hz <= 0.0)
        throw std::domain_error("wavelength: carrier frequency must be positive and finite");
    return kSpeedOfLight / carrier_freq_hz;
}

namespace {

bool is_power_of_two(long long v) {
    return v > 0 && (v & (v - 1)) == 0;
}

}  // namespace

std::vector<std::string> validate_config(const RadarConfig& c) {
    std::vector<std::string> errors;
    if (!std::isfinite(c.carrier_freq) || c.carrier_freq <= 0.0)
        errors.push_back("carrier_freq must be positive and finite");
    if (!std::isfinite(c.adc_rate_sps) || c.adc_rate_sps <= 0.0)
        errors.push_back("adc_rate_sps must be positive and finite");
    if (c.frame_len < 8 || !is_power_of_two(c.frame_len))
        errors.push_back("frame_len not a power of two >= 8");
    if (c.adc_bits < 4 || c.adc_bits > 24)
        errors.push_back("adc_bits must be in [4, 24]");
    if (!std::isfinite(c.rx_bandwidth_hz) || c.rx_bandwidth_hz <= 0.0)
        errors.push_back("rx_bandwidth_hz must be positive and finite");
    if (!std::isfinite(c.adc_full_scale) || c.adc_full_scale <= 0.0)
        errors.push_back("adc_full_scale must be positive and finite");
    if (!std::isfinite(c.baseband_gain) || c.baseband_gain <= 0.0)
        errors.push_back("baseband_gain must be positive and finite");
    if (!std::isfinite(c.tx_power_dbm)) errors.push_back("tx_power_dbm must be finite");
    if (!std::isfinite(c.tx_gain_dbi)) errors.push_back("tx_gain_dbi must be finite");
    if (!std::isfinite(c.rx_gain_dbi)) errors.push_back("rx_gain_dbi must be finite");
    if (!std::isfinite(c.noise_figure_db)) errors.push_back("noise_figure_db must be finite");
    if (!std::isfinite(c.rcs_dbsm)) errors.push_back("rcs_dbsm must be finite");
    return errors;
}

const RadarConfig& ensure_valid(const RadarConfig& c) {
    const auto errors = validate_config(c);
    if (errors.empty()) return c;
    std::ostringstream msg;
    msg << "invalid radar config:";
    for (const auto& e : errors) msg << " [" << e << "]";
    throw std::invalid_argument(msg.str());
}

}  // namespace cwdop
