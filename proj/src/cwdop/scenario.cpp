#include "cwdop/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "cwdop/parse_error.hpp"

namespace cwdop {

namespace {

struct RawValue {
    std::string text;
    int line = 0;
};

using Section = std::map<std::string, RawValue>;

struct RawScenario {
    Section radar;
    Section trajectory;
    Section run;
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("scenario line " + std::to_string(line) + ": " + msg);
}

RawScenario tokenize(const std::string& text) {
    RawScenario raw;
    Section* current = nullptr;
    const char* current_name = nullptr;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(lineno, "unterminated section header");
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (name == "radar") current = &raw.radar;
            else if (name == "trajectory") current = &raw.trajectory;
            else if (name == "run") current = &raw.run;
            else fail(lineno, "unknown section [" + name + "]");
            current_name = name == "radar" ? "radar" : (name == "trajectory" ? "trajectory" : "run");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected key = value");
        if (current == nullptr) fail(lineno, "key outside any [section]");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(lineno, "empty key");
        if (value.empty()) fail(lineno, "empty value for key '" + key + "'");
        if (current->count(key))
            fail(lineno, std::string("duplicate key '") + key + "' in [" + current_name + "]");
        (*current)[key] = {value, lineno};
    }
    return raw;
}

double parse_double(const RawValue& v, const std::string& key) {
    std::size_t consumed = 0;
    double out = 0.0;
    try {
        out = std::stod(v.text, &consumed);
    } catch (const std::exception&) {
        fail(v.line, "value of '" + key + "' is not a number: " + v.text);
    }
    if (consumed != v.text.size())
        fail(v.line, "trailing characters in value of '" + key + "': " + v.text);
    return out;
}

long long parse_int(const RawValue& v, const std::string& key) {
    std::size_t consumed = 0;
    long long out = 0;
    try {
        out = std::stoll(v.text, &consumed);
    } catch (const std::exception&) {
        fail(v.line, "value of '" + key + "' is not an integer: " + v.text);
    }
    if (consumed != v.text.size())
        fail(v.line, "trailing characters in value of '" + key + "': " + v.text);
    return out;
}

std::uint64_t parse_uint(const RawValue& v, const std::string& key) {
    const long long value = parse_int(v, key);
    if (value < 0) fail(v.line, "value of '" + key + "' must be non-negative");
    return static_cast<std::uint64_t>(value);
}

bool parse_bool(const RawValue& v, const std::string& key) {
    if (v.text == "true") return true;
    if (v.text == "false") return false;
    fail(v.line, "value of '" + key + "' must be true or false");
}

// Consuming lookup so leftovers can be reported as unknown keys.
std::optional<RawValue> take(Section& section, const std::string& key) {
    const auto it = section.find(key);
    if (it == section.end()) return std::nullopt;
    RawValue v = it->second;
    section.erase(it);
    return v;
}

void reject_leftovers(const Section& section, const char* section_name) {
    if (section.empty()) return;
    const auto& [key, value] = *section.begin();
    fail(value.line, std::string("unknown key '") + key + "' in [" + section_name + "]");
}

RadarConfig resolve_radar(Section section) {
    RadarConfig cfg;
    auto set_double = [&](const char* key, double& field) {
        if (auto v = take(section, key)) field = parse_double(*v, key);
    };
    set_double("carrier_freq", cfg.carrier_freq);
    set_double("tx_power_dbm", cfg.tx_power_dbm);
    set_double("tx_gain_dbi", cfg.tx_gain_dbi);
    set_double("rx_gain_dbi", cfg.rx_gain_dbi);
    set_double("noise_figure_db", cfg.noise_figure_db);
    set_double("rx_bandwidth_hz", cfg.rx_bandwidth_hz);
    set_double("adc_rate_sps", cfg.adc_rate_sps);
    if (auto v = take(section, "frame_len"))
        cfg.frame_len = static_cast<int>(parse_int(*v, "frame_len"));
    if (auto v = take(section, "adc_bits"))
        cfg.adc_bits = static_cast<int>(parse_int(*v, "adc_bits"));
    set_double("adc_full_scale", cfg.adc_full_scale);
    set_double("rcs_dbsm", cfg.rcs_dbsm);
    set_double("baseband_gain", cfg.baseband_gain);
    reject_leftovers(section, "radar");

    const auto errors = validate_config(cfg);
    if (!errors.empty()) {
        std::string msg = "invalid [radar] section:";
        for (const auto& e : errors) msg += " [" + e + "]";
        throw ParseError(msg);
    }
    return cfg;
}

RunSettings resolve_run(Section section) {
    RunSettings run;
    if (auto v = take(section, "n_frames")) {
        const long long n = parse_int(*v, "n_frames");
        if (n < 1) fail(v->line, "n_frames must be >= 1");
        run.n_frames = static_cast<std::size_t>(n);
    }
    if (auto v = take(section, "noise_seed")) run.noise_seed = parse_uint(*v, "noise_seed");
    if (auto v = take(section, "include_noise"))
        run.include_noise = parse_bool(*v, "include_noise");
    if (auto v = take(section, "window")) {
        try {
            run.window = window_kind_from_string(v->text);
        } catch (const std::domain_error& e) {
            fail(v->line, e.what());
        }
    }
    if (auto v = take(section, "threshold_factor")) {
        run.threshold_factor = parse_double(*v, "threshold_factor");
        if (!(run.threshold_factor > 0.0)) fail(v->line, "threshold_factor must be positive");
    }
    reject_leftovers(section, "run");
    return run;
}

std::vector<Trajectory::Segment> parse_segments(const RawValue& v) {
    std::vector<Trajectory::Segment> segments;
    std::istringstream in(v.text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            fail(v.line, "segment '" + item + "' must be duration:rate");
        RawValue dur{trim(item.substr(0, colon)), v.line};
        RawValue rate{trim(item.substr(colon + 1)), v.line};
        segments.push_back({parse_double(dur, "segments"), parse_double(rate, "segments")});
    }
    if (segments.empty()) fail(v.line, "segments list is empty");
    return segments;
}

Trajectory resolve_trajectory(Section section, const RadarConfig& cfg,
                              const RunSettings& run) {
    const auto kind_value = take(section, "kind");
    if (!kind_value) throw ParseError("missing 'kind' in [trajectory]");
    const std::string kind = kind_value->text;
    const double run_duration =
        static_cast<double>(run.n_frames) * cfg.frame_len / cfg.adc_rate_sps;

    auto required_speed = [&]() -> double {
        const auto v = take(section, "speed");
        if (!v) throw ParseError("missing 'speed' in [trajectory]");
        return parse_double(*v, "speed");
    };
    auto take_double = [&](const char* key, double fallback) {
        if (auto v = take(section, key)) return parse_double(*v, key);
        return fallback;
    };
    auto take_count = [&](const char* key, int fallback) {
        if (auto v = take(section, key)) return static_cast<int>(parse_int(*v, key));
        return fallback;
    };

    std::optional<Trajectory> traj;
    try {
        if (kind == "constant_radial") {
            const double speed = required_speed();
            const double start = take_double("start_range", 4.0);
            const double duration = take_double("duration", run_duration);
            traj = Trajectory::constant_radial(start, speed, duration);
        } else if (kind == "radial_shuttle") {
            ShuttleParams p;
            p.speed_mps = required_speed();
            p.near_range_m = take_double("near_range", 0.5);
            p.far_range_m = take_double("far_range", 4.0);
            p.dwell_s = take_double("dwell", 0.0);
            p.cycles = take_count("cycles", 1);
            traj = Trajectory::radial_shuttle(p);
        } else if (kind == "crossing") {
            CrossingParams p;
            p.speed_mps = required_speed();
            p.closest_approach_m = take_double("closest_approach", 0.5);
            p.half_span_m = take_double("half_span", 2.0);
            p.passes = take_count("passes", 1);
            traj = Trajectory::crossing(p);
        } else if (kind == "piecewise") {
            const double start = take_double("start_range", 4.0);
            const auto segments_value = take(section, "segments");
            if (!segments_value) throw ParseError("missing 'segments' in [trajectory]");
            traj = Trajectory::piecewise(start, parse_segments(*segments_value));
        } else {
            fail(kind_value->line, "unknown trajectory kind '" + kind + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid [trajectory] section: ") + e.what());
    }
    reject_leftovers(section, "trajectory");

    const double needed =
        (static_cast<double>(run.n_frames) * cfg.frame_len - 1.0) / cfg.adc_rate_sps;
    if (traj->duration_s() < needed) {
        std::ostringstream msg;
        msg << "trajectory lasts " << traj->duration_s() << " s but the run needs "
            << run_duration << " s (" << run.n_frames << " frames)";
        throw ParseError(msg.str());
    }
    return std::move(*traj);
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    RawScenario raw = tokenize(text);
    RadarConfig cfg = resolve_radar(std::move(raw.radar));
    RunSettings run = resolve_run(std::move(raw.run));
    Trajectory traj = resolve_trajectory(std::move(raw.trajectory), cfg, run);
    return Scenario{cfg, std::move(traj), run};
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

QuantizedFrames simulate(const Scenario& scenario) {
    const auto n_samples =
        scenario.run.n_frames * static_cast<std::size_t>(scenario.radar.frame_len);
    const IQStream stream =
        synthesize_if(scenario.trajectory, scenario.radar, scenario.run.noise_seed,
                      scenario.run.include_noise, n_samples);
    return quantize(stream, scenario.radar);
}

VelocityMapResult process(const Scenario& scenario, const QuantizedFrames& frames) {
    return velocity_map(frames, frames.config, scenario.run.window,
                        scenario.run.threshold_factor);
}

}  // namespace cwdop
