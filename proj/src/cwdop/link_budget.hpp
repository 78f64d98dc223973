#ifndef CWDOP_LINK_BUDGET_HPP
#define CWDOP_LINK_BUDGET_HPP

namespace cwdop {

struct RadarConfig;

// Inputs of the monostatic radar equation.
struct LinkBudgetParams {
    double tx_power_dbm = 6.0;
    double tx_gain_dbi  = 9.355;
    double rx_gain_dbi  = 9.355;
    double wavelength_m = 0.0124913524;
    double rcs_dbsm     = 0.0;   // dB relative to 1 m^2
    double range_m      = 4.0;
};

struct LinkBudgetReport {
    double received_power_dbm = 0.0;
    double noise_floor_dbm = 0.0;
    double snr_db = 0.0;   // always received - floor
};

// Radar equation in dB form:
//   P_r = P_T + G_T + G_R + 20 log10(lambda) + sigma - 30 log10(4 pi) - 40 log10(R)
// Equivalent to the linear P_T G_T G_R lambda^2 sigma / ((4 pi)^3 R^4), but
// immune to underflow at extreme ranges. Throws std::domain_error when
// range or wavelength is not positive, std::invalid_argument for non-finite fields.
double received_power_dbm(const LinkBudgetParams& params);

// -174 dBm/Hz + NF + 10 log10(B). Throws std::domain_error for B <= 0.
double noise_floor_dbm(double noise_figure_db, double bandwidth_hz);

double snr_db(double received_power_dbm, double noise_floor_dbm);

// The unique positive range at which the link meets min_snr_db against the
// given noise floor (the R^4 law makes the inversion closed-form). The
// range_m field of params is ignored.
double max_range_m(const LinkBudgetParams& params, double min_snr_db,
                   double noise_floor_dbm);

// Convenience pulls of the equation symbols out of a RadarConfig.
LinkBudgetParams link_params_from_config(const RadarConfig& config, double range_m);
LinkBudgetReport link_report(const LinkBudgetParams& params,
                             double noise_figure_db, double bandwidth_hz);

}  // namespace cwdop

#endif
