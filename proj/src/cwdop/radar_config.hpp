#ifndef CWDOP_RADAR_CONFIG_HPP
#define CWDOP_RADAR_CONFIG_HPP

#include <string>
#include <vector>

namespace cwdop {

// Exact SI value; derived numbers depend on it being exact.
inline constexpr double kSpeedOfLight = 299792458.0;

// Thermal noise density used by the noise-floor formula.
inline constexpr double kThermalNoiseDbmPerHz = -174.0;

// Front-end and digitizer parameters of the 24 GHz CW Doppler radar.
// One validated instance is the single source of truth for every
// equation downstream (synthesis, link budget, DSP).
struct RadarConfig {
    double carrier_freq    = 24.0e9;   // Hz
    double tx_power_dbm    = 6.0;
    double tx_gain_dbi     = 9.355;
    double rx_gain_dbi     = 9.355;
    double noise_figure_db = 10.0;
    double rx_bandwidth_hz = 1500.0;
    double adc_rate_sps    = 3000.0;   // complex IQ pairs per second
    int    frame_len       = 128;      // samples per frame, power of two >= 8
    int    adc_bits        = 12;       // in [4, 24]
    double adc_full_scale  = 1.0;      // volts; the IF range is not published, 1 V is the documented reference
    double rcs_dbsm        = 0.0;      // target cross-section seen by the synthesizer
    double baseband_gain   = 2600.0;   // IF amplifier chain voltage gain; puts the 4 m human echo at ~25% of full scale
};

// c / f. Throws std::domain_error for non-positive or non-finite input.
double wavelength(double carrier_freq_hz);

// Returns one message per violated invariant, in field order; empty means valid.
// Never short-circuits.
std::vector<std::string> validate_config(const RadarConfig& config);

// Returns the config unchanged if valid, otherwise throws std::invalid_argument
// whose message joins every violation.
const RadarConfig& ensure_valid(const RadarConfig& config);

}  // namespace cwdop

#endif
