#include "cwdop/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cwdop/radar_config.hpp"

namespace cwdop {

namespace {

void check_finite(const LinkBudgetParams& p) {
    if (!std::isfinite(p.tx_power_dbm) || !std::isfinite(p.tx_gain_dbi) ||
        !std::isfinite(p.rx_gain_dbi) || !std::isfinite(p.wavelength_m) ||
        !std::isfinite(p.rcs_dbsm) || !std::isfinite(p.range_m))
        throw std::invalid_argument("link budget: all parameters must be finite");
}

// Gain and spreading terms that do not depend on range.
double fixed_terms_db(const LinkBudgetParams& p) {
    return p.tx_power_dbm + p.tx_gain_dbi + p.rx_gain_dbi +
           20.0 * std::log10(p.wavelength_m) + p.rcs_dbsm -
           30.0 * std::log10(4.0 * std::numbers::pi);
}

}  // namespace

double received_power_dbm(const LinkBudgetParams& p) {
    check_finite(p);
    if (p.range_m <= 0.0) throw std::domain_error("link budget: range must be positive");
    if (p.wavelength_m <= 0.0) throw std::domain_error("link budget: wavelength must be positive");
    return fixed_terms_db(p) - 40.0 * std::log10(p.range_m);
}

double noise_floor_dbm(double noise_figure_db, double bandwidth_hz) {
    if (!std::isfinite(noise_figure_db) || !std::isfinite(bandwidth_hz))
        throw std::invalid_argument("noise floor: inputs must be finite");
    if (bandwidth_hz <= 0.0) throw std::domain_error("noise floor: bandwidth must be positive");
    return kThermalNoiseDbmPerHz + noise_figure_db + 10.0 * std::log10(bandwidth_hz);
}

double snr_db(double received_power_dbm, double noise_floor_dbm) {
    return received_power_dbm - noise_floor_dbm;
}

double max_range_m(const LinkBudgetParams& p, double min_snr_db,
                   double noise_floor_dbm) {
    check_finite(p);
    if (!std::isfinite(min_snr_db) || !std::isfinite(noise_floor_dbm))
        throw std::invalid_argument("max range: snr and floor must be finite");
    if (p.wavelength_m <= 0.0) throw std::domain_error("max range: wavelength must be positive");
    const double required_dbm = noise_floor_dbm + min_snr_db;
    return std::pow(10.0, (fixed_terms_db(p) - required_dbm) / 40.0);
}

LinkBudgetParams link_params_from_config(const RadarConfig& c, double range_m) {
    LinkBudgetParams p;
    p.tx_power_dbm = c.tx_power_dbm;
    p.tx_gain_dbi = c.tx_gain_dbi;
    p.rx_gain_dbi = c.rx_gain_dbi;
    p.wavelength_m = wavelength(c.carrier_freq);
    p.rcs_dbsm = c.rcs_dbsm;
    p.range_m = range_m;
    return p;
}

LinkBudgetReport link_report(const LinkBudgetParams& p,
                             double noise_figure_db, double bandwidth_hz) {
    LinkBudgetReport r;
    r.received_power_dbm = received_power_dbm(p);
    r.noise_floor_dbm = noise_floor_dbm(noise_figure_db, bandwidth_hz);
    r.snr_db = snr_db(r.received_power_dbm, r.noise_floor_dbm);
    return r;
}

}  // namespace cwdop
