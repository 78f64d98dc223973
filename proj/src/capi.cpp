// extern-C shim over the cwdop core: opaque handles, status codes, and a
// thread-local last-error message. Exceptions never cross the boundary.

#include "cwdop/cwdop.h"

#include <complex>
#include <cstdio>
#include <exception>
#include <fstream>
#include <new>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "cwdop/antenna.hpp"
#include "cwdop/dsp.hpp"
#include "cwdop/if_recording.hpp"
#include "cwdop/link_budget.hpp"
#include "cwdop/map_io.hpp"
#include "cwdop/parse_error.hpp"
#include "cwdop/radar_config.hpp"
#include "cwdop/scenario.hpp"
#include "cwdop/synth.hpp"

struct cwdop_scenario {
    cwdop::Scenario value;
};

struct cwdop_frames {
    cwdop::QuantizedFrames value;
};

struct cwdop_map {
    cwdop::VelocityMapResult value;
};

namespace {

thread_local std::string g_last_error;

cwdop_status fail(cwdop_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Runs the body, translating exceptions to status codes.
template <typename Fn>
cwdop_status guarded(Fn&& body) {
    try {
        body();
        g_last_error.clear();
        return CWDOP_OK;
    } catch (const cwdop::ParseError& e) {
        return fail(CWDOP_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CWDOP_ERR_INVALID, e.what());
    } catch (const std::domain_error& e) {
        return fail(CWDOP_ERR_INVALID, e.what());
    } catch (const std::ios_base::failure& e) {
        return fail(CWDOP_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CWDOP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        // Filesystem problems surface as runtime_error from the writers.
        const std::string what = e.what();
        if (what.find("cannot open") != std::string::npos ||
            what.find("write failed") != std::string::npos)
            return fail(CWDOP_ERR_IO, what);
        return fail(CWDOP_ERR_INTERNAL, what);
    }
}

cwdop_status require(const void* p, const char* name) {
    if (p != nullptr) return CWDOP_OK;
    return fail(CWDOP_ERR_NULL_ARGUMENT, std::string(name) + " must not be NULL");
}

}  // namespace

extern "C" {

const char* cwdop_status_name(cwdop_status status) {
    switch (status) {
        case CWDOP_OK: return "ok";
        case CWDOP_ERR_NULL_ARGUMENT: return "null argument";
        case CWDOP_ERR_INVALID: return "invalid argument";
        case CWDOP_ERR_PARSE: return "parse error";
        case CWDOP_ERR_IO: return "io error";
        case CWDOP_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* cwdop_last_error(void) { return g_last_error.c_str(); }

cwdop_status cwdop_wavelength_m(double carrier_hz, double* out_m) {
    if (auto s = require(out_m, "out_m"); s != CWDOP_OK) return s;
    return guarded([&] { *out_m = cwdop::wavelength(carrier_hz); });
}

cwdop_status cwdop_received_power_dbm(double tx_power_dbm, double tx_gain_dbi,
                                      double rx_gain_dbi, double wavelength_m,
                                      double rcs_dbsm, double range_m,
                                      double* out_dbm) {
    if (auto s = require(out_dbm, "out_dbm"); s != CWDOP_OK) return s;
    return guarded([&] {
        cwdop::LinkBudgetParams p;
        p.tx_power_dbm = tx_power_dbm;
        p.tx_gain_dbi = tx_gain_dbi;
        p.rx_gain_dbi = rx_gain_dbi;
        p.wavelength_m = wavelength_m;
        p.rcs_dbsm = rcs_dbsm;
        p.range_m = range_m;
        *out_dbm = cwdop::received_power_dbm(p);
    });
}

cwdop_status cwdop_noise_floor_dbm(double noise_figure_db, double bandwidth_hz,
                                   double* out_dbm) {
    if (auto s = require(out_dbm, "out_dbm"); s != CWDOP_OK) return s;
    return guarded([&] { *out_dbm = cwdop::noise_floor_dbm(noise_figure_db, bandwidth_hz); });
}

double cwdop_snr_db(double received_power_dbm, double noise_floor_dbm) {
    return cwdop::snr_db(received_power_dbm, noise_floor_dbm);
}

cwdop_status cwdop_max_detectable_velocity_mps(double adc_rate_sps,
                                               double carrier_hz, double* out_mps) {
    if (auto s = require(out_mps, "out_mps"); s != CWDOP_OK) return s;
    return guarded([&] {
        if (adc_rate_sps <= 0.0)
            throw std::domain_error("adc_rate_sps must be positive");
        *out_mps = 0.25 * adc_rate_sps * cwdop::wavelength(carrier_hz);
    });
}

cwdop_status cwdop_scenario_load(const char* path, cwdop_scenario** out) {
    if (auto s = require(path, "path"); s != CWDOP_OK) return s;
    if (auto s = require(out, "out"); s != CWDOP_OK) return s;
    return guarded([&] { *out = new cwdop_scenario{cwdop::load_scenario(path)}; });
}

cwdop_status cwdop_scenario_parse(const char* text, cwdop_scenario** out) {
    if (auto s = require(text, "text"); s != CWDOP_OK) return s;
    if (auto s = require(out, "out"); s != CWDOP_OK) return s;
    return guarded([&] { *out = new cwdop_scenario{cwdop::parse_scenario(text)}; });
}

cwdop_status cwdop_scenario_override_seed(cwdop_scenario* scenario, uint64_t seed) {
    if (auto s = require(scenario, "scenario"); s != CWDOP_OK) return s;
    scenario->value.run.noise_seed = seed;
    g_last_error.clear();
    return CWDOP_OK;
}

void cwdop_scenario_free(cwdop_scenario* scenario) { delete scenario; }

cwdop_status cwdop_simulate(const cwdop_scenario* scenario, cwdop_frames** out) {
    if (auto s = require(scenario, "scenario"); s != CWDOP_OK) return s;
    if (auto s = require(out, "out"); s != CWDOP_OK) return s;
    return guarded([&] { *out = new cwdop_frames{cwdop::simulate(scenario->value)}; });
}

cwdop_status cwdop_frames_write(const cwdop_frames* frames, const char* path) {
    if (auto s = require(frames, "frames"); s != CWDOP_OK) return s;
    if (auto s = require(path, "path"); s != CWDOP_OK) return s;
    return guarded([&] { cwdop::write_if_recording(frames->value, std::string(path)); });
}

cwdop_status cwdop_frames_read(const char* path, cwdop_frames** out) {
    if (auto s = require(path, "path"); s != CWDOP_OK) return s;
    if (auto s = require(out, "out"); s != CWDOP_OK) return s;
    return guarded([&] {
        *out = new cwdop_frames{cwdop::read_if_recording_file(path)};
    });
}

size_t cwdop_frames_count(const cwdop_frames* frames) {
    return frames ? frames->value.frames.size() : 0;
}

size_t cwdop_frames_clip_count(const cwdop_frames* frames) {
    return frames ? frames->value.clip_count : 0;
}

void cwdop_frames_free(cwdop_frames* frames) { delete frames; }

cwdop_status cwdop_process(const cwdop_frames* frames, const char* window_kind,
                           double threshold_factor, cwdop_map** out) {
    if (auto s = require(frames, "frames"); s != CWDOP_OK) return s;
    if (auto s = require(window_kind, "window_kind"); s != CWDOP_OK) return s;
    if (auto s = require(out, "out"); s != CWDOP_OK) return s;
    return guarded([&] {
        const auto window = cwdop::window_kind_from_string(window_kind);
        *out = new cwdop_map{cwdop::velocity_map(frames->value, frames->value.config,
                                                 window, threshold_factor)};
    });
}

cwdop_status cwdop_process_scenario(const cwdop_scenario* scenario,
                                    const cwdop_frames* frames, cwdop_map** out) {
    if (auto s = require(scenario, "scenario"); s != CWDOP_OK) return s;
    if (auto s = require(frames, "frames"); s != CWDOP_OK) return s;
    if (auto s = require(out, "out"); s != CWDOP_OK) return s;
    return guarded([&] {
        *out = new cwdop_map{cwdop::process(scenario->value, frames->value)};
    });
}

cwdop_status cwdop_map_write_csv(const cwdop_map* map, const char* path) {
    if (auto s = require(map, "map"); s != CWDOP_OK) return s;
    if (auto s = require(path, "path"); s != CWDOP_OK) return s;
    return guarded([&] { cwdop::write_velocity_map_csv(map->value.map, std::string(path)); });
}

cwdop_status cwdop_map_write_pgm(const cwdop_map* map, const char* path) {
    if (auto s = require(map, "map"); s != CWDOP_OK) return s;
    if (auto s = require(path, "path"); s != CWDOP_OK) return s;
    return guarded([&] { cwdop::write_velocity_map_pgm(map->value.map, std::string(path)); });
}

size_t cwdop_map_rows(const cwdop_map* map) {
    return map ? map->value.map.rows.size() : 0;
}

void cwdop_map_free(cwdop_map* map) { delete map; }

cwdop_status cwdop_antenna_pattern_csv(int n_elements, double pitch_m,
                                       double bend_radius_m, double frequency_hz,
                                       const char* path) {
    if (auto s = require(path, "path"); s != CWDOP_OK) return s;
    return guarded([&] {
        cwdop::ArrayGeometry geom;
        geom.n_elements = n_elements;
        geom.pitch_m = pitch_m;
        if (bend_radius_m > 0.0) geom.bend_radius_m = bend_radius_m;
        const std::vector<std::complex<double>> excitation(
            static_cast<std::size_t>(n_elements > 0 ? n_elements : 0), {1.0, 0.0});
        const auto result = cwdop::array_directivity(geom, excitation, frequency_hz);

        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error(std::string("cannot open for writing: ") + path);
        out << "angle_deg,dbi\n";
        char buf[96];
        for (std::size_t i = 0; i < result.cut_dbi.angles_rad.size(); ++i) {
            const double deg =
                result.cut_dbi.angles_rad[i] * 180.0 / std::numbers::pi;
            const int written = std::snprintf(buf, sizeof(buf), "%.6f,%.6f\n", deg,
                                              result.cut_dbi.values[i]);
            out.write(buf, written);
        }
        if (!out) throw std::runtime_error(std::string("write failed: ") + path);
    });
}

}  // extern "C"
