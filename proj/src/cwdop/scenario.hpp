#ifndef CWDOP_SCENARIO_HPP
#define CWDOP_SCENARIO_HPP

#include <cstdint>
#include <string>

#include "cwdop/dsp.hpp"
#include "cwdop/radar_config.hpp"
#include "cwdop/trajectory.hpp"

namespace cwdop {

struct RunSettings {
    std::size_t n_frames = 1;
    std::uint64_t noise_seed = 0;
    bool include_noise = true;
    WindowKind window = WindowKind::hann;
    double threshold_factor = 8.0;
};

// A fully resolved simulation request: validated config, constructed
// trajectory (long enough to cover the run), and processing settings.
struct Scenario {
    RadarConfig radar;
    Trajectory trajectory;
    RunSettings run;
};

// Line-oriented scenario format:
//   [radar] / [trajectory] / [run] section headers,
//   key = value lines, # comments, case-sensitive keys.
// Unknown keys, unknown sections, duplicate keys, and syntax errors raise
// ParseError naming the line; downstream invariant violations (config
// validation, trajectory construction, run coverage) raise ParseError too.
Scenario parse_scenario(const std::string& text);

Scenario load_scenario(const std::string& path);

// Synthesize + quantize exactly run.n_frames frames of the scenario.
QuantizedFrames simulate(const Scenario& scenario);

// Run the receive pipeline with the scenario's window and threshold.
VelocityMapResult process(const Scenario& scenario, const QuantizedFrames& frames);

}  // namespace cwdop

#endif
