/*
 * cwdop - 24 GHz continuous-wave Doppler radar simulator, C API.
 *
 * Every entry point returns a cwdop_status; on failure cwdop_last_error()
 * holds a human-readable message for the calling thread. Objects returned
 * through out-parameters are owned by the caller and released with the
 * matching _free function. Handles are opaque.
 */

#ifndef CWDOP_CWDOP_H
#define CWDOP_CWDOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CWDOP_API __declspec(dllexport)
#else
#define CWDOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cwdop_status {
    CWDOP_OK = 0,
    CWDOP_ERR_NULL_ARGUMENT = 1,  /* a required pointer was NULL */
    CWDOP_ERR_INVALID = 2,        /* argument or domain violation */
    CWDOP_ERR_PARSE = 3,          /* malformed scenario or recording */
    CWDOP_ERR_IO = 4,             /* file could not be read or written */
    CWDOP_ERR_INTERNAL = 5
} cwdop_status;

CWDOP_API const char* cwdop_status_name(cwdop_status status);

/* Message for the most recent failure on this thread; empty string if none. */
CWDOP_API const char* cwdop_last_error(void);

/* ---- scalar operations ------------------------------------------------- */

/* c / f, meters. */
CWDOP_API cwdop_status cwdop_wavelength_m(double carrier_hz, double* out_m);

/* Radar-equation received power, dBm. */
CWDOP_API cwdop_status cwdop_received_power_dbm(double tx_power_dbm,
                                                double tx_gain_dbi,
                                                double rx_gain_dbi,
                                                double wavelength_m,
                                                double rcs_dbsm, double range_m,
                                                double* out_dbm);

/* -174 dBm/Hz + NF + 10 log10(B), dBm. */
CWDOP_API cwdop_status cwdop_noise_floor_dbm(double noise_figure_db,
                                             double bandwidth_hz, double* out_dbm);

CWDOP_API double cwdop_snr_db(double received_power_dbm, double noise_floor_dbm);

/* Aliasing limit f_adc * lambda / 4, m/s. */
CWDOP_API cwdop_status cwdop_max_detectable_velocity_mps(double adc_rate_sps,
                                                         double carrier_hz,
                                                         double* out_mps);

/* ---- scenario ----------------------------------------------------------- */

typedef struct cwdop_scenario cwdop_scenario;

CWDOP_API cwdop_status cwdop_scenario_load(const char* path, cwdop_scenario** out);
CWDOP_API cwdop_status cwdop_scenario_parse(const char* text, cwdop_scenario** out);
CWDOP_API cwdop_status cwdop_scenario_override_seed(cwdop_scenario* scenario,
                                                    uint64_t seed);
CWDOP_API void cwdop_scenario_free(cwdop_scenario* scenario);

/* ---- IF frames ---------------------------------------------------------- */

typedef struct cwdop_frames cwdop_frames;

/* Synthesize, quantize, and frame the scenario's run. */
CWDOP_API cwdop_status cwdop_simulate(const cwdop_scenario* scenario,
                                      cwdop_frames** out);

CWDOP_API cwdop_status cwdop_frames_write(const cwdop_frames* frames,
                                          const char* path);
CWDOP_API cwdop_status cwdop_frames_read(const char* path, cwdop_frames** out);
CWDOP_API size_t cwdop_frames_count(const cwdop_frames* frames);
CWDOP_API size_t cwdop_frames_clip_count(const cwdop_frames* frames);
CWDOP_API void cwdop_frames_free(cwdop_frames* frames);

/* ---- velocity maps ------------------------------------------------------ */

typedef struct cwdop_map cwdop_map;

/* Receive pipeline over all frames. window_kind: "rect" | "rectangular" |
 * "hann". */
CWDOP_API cwdop_status cwdop_process(const cwdop_frames* frames,
                                     const char* window_kind,
                                     double threshold_factor, cwdop_map** out);

/* Same, taking window and threshold from the scenario's run settings. */
CWDOP_API cwdop_status cwdop_process_scenario(const cwdop_scenario* scenario,
                                              const cwdop_frames* frames,
                                              cwdop_map** out);

CWDOP_API cwdop_status cwdop_map_write_csv(const cwdop_map* map, const char* path);
CWDOP_API cwdop_status cwdop_map_write_pgm(const cwdop_map* map, const char* path);
CWDOP_API size_t cwdop_map_rows(const cwdop_map* map);
CWDOP_API void cwdop_map_free(cwdop_map* map);

/* ---- antenna ------------------------------------------------------------ */

/* Uniform-excitation directivity cut of an n-element series-fed array,
 * written as `angle_deg,dbi` CSV. bend_radius_m <= 0 means flat. */
CWDOP_API cwdop_status cwdop_antenna_pattern_csv(int n_elements, double pitch_m,
                                                 double bend_radius_m,
                                                 double frequency_hz,
                                                 const char* path);

#ifdef __cplusplus
}
#endif

#endif /* CWDOP_CWDOP_H */
