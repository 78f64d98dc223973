// cwdop command-line front end. Talks to the core exclusively through the
// C API in cwdop/cwdop.h.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cwdop/cwdop.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

int runtime_failure(cwdop_status status) {
    std::fprintf(stderr, "error (%s): %s\n", cwdop_status_name(status),
                 cwdop_last_error());
    return kExitRuntime;
}

struct ScenarioDeleter {
    void operator()(cwdop_scenario* p) const { cwdop_scenario_free(p); }
};
struct FramesDeleter {
    void operator()(cwdop_frames* p) const { cwdop_frames_free(p); }
};
struct MapDeleter {
    void operator()(cwdop_map* p) const { cwdop_map_free(p); }
};

using ScenarioPtr = std::unique_ptr<cwdop_scenario, ScenarioDeleter>;
using FramesPtr = std::unique_ptr<cwdop_frames, FramesDeleter>;
using MapPtr = std::unique_ptr<cwdop_map, MapDeleter>;

struct SimulateArgs {
    std::string scenario;
    std::string out_if;
    std::string out_map;
    std::string heatmap;
    std::optional<std::uint64_t> seed;
};

int run_simulate(const SimulateArgs& args) {
    ScenarioPtr scenario;
    {
        cwdop_scenario* raw = nullptr;
        if (auto s = cwdop_scenario_load(args.scenario.c_str(), &raw); s != CWDOP_OK)
            return runtime_failure(s);
        scenario.reset(raw);
    }
    if (args.seed)
        cwdop_scenario_override_seed(scenario.get(), *args.seed);

    FramesPtr frames;
    {
        cwdop_frames* raw = nullptr;
        if (auto s = cwdop_simulate(scenario.get(), &raw); s != CWDOP_OK)
            return runtime_failure(s);
        frames.reset(raw);
    }
    std::printf("frames=%zu\n", cwdop_frames_count(frames.get()));
    std::printf("clipped_samples=%zu\n", cwdop_frames_clip_count(frames.get()));

    if (!args.out_if.empty())
        if (auto s = cwdop_frames_write(frames.get(), args.out_if.c_str()); s != CWDOP_OK)
            return runtime_failure(s);

    if (!args.out_map.empty() || !args.heatmap.empty()) {
        MapPtr map;
        cwdop_map* raw = nullptr;
        if (auto s = cwdop_process_scenario(scenario.get(), frames.get(), &raw);
            s != CWDOP_OK)
            return runtime_failure(s);
        map.reset(raw);
        if (!args.out_map.empty())
            if (auto s = cwdop_map_write_csv(map.get(), args.out_map.c_str());
                s != CWDOP_OK)
                return runtime_failure(s);
        if (!args.heatmap.empty())
            if (auto s = cwdop_map_write_pgm(map.get(), args.heatmap.c_str());
                s != CWDOP_OK)
                return runtime_failure(s);
    }
    return kExitOk;
}

struct ProcessArgs {
    std::string if_path;
    std::string out_map;
    std::string heatmap;
    std::string window = "hann";
    double threshold = 8.0;
};

int run_process(const ProcessArgs& args) {
    FramesPtr frames;
    {
        cwdop_frames* raw = nullptr;
        if (auto s = cwdop_frames_read(args.if_path.c_str(), &raw); s != CWDOP_OK)
            return runtime_failure(s);
        frames.reset(raw);
    }
    MapPtr map;
    {
        cwdop_map* raw = nullptr;
        if (auto s = cwdop_process(frames.get(), args.window.c_str(), args.threshold, &raw);
            s != CWDOP_OK)
            return runtime_failure(s);
        map.reset(raw);
    }
    std::printf("frames=%zu\n", cwdop_map_rows(map.get()));
    if (!args.out_map.empty())
        if (auto s = cwdop_map_write_csv(map.get(), args.out_map.c_str()); s != CWDOP_OK)
            return runtime_failure(s);
    if (!args.heatmap.empty())
        if (auto s = cwdop_map_write_pgm(map.get(), args.heatmap.c_str()); s != CWDOP_OK)
            return runtime_failure(s);
    return kExitOk;
}

struct LinkBudgetArgs {
    double pt = 0.0, gt = 0.0, gr = 0.0, fc = 0.0, rcs = 0.0, range = 0.0;
    double nf = 10.0, bw = 1500.0;
};

int run_linkbudget(const LinkBudgetArgs& args) {
    double lambda = 0.0;
    if (auto s = cwdop_wavelength_m(args.fc, &lambda); s != CWDOP_OK)
        return runtime_failure(s);
    double pr = 0.0;
    if (auto s = cwdop_received_power_dbm(args.pt, args.gt, args.gr, lambda, args.rcs,
                                          args.range, &pr);
        s != CWDOP_OK)
        return runtime_failure(s);
    double pn = 0.0;
    if (auto s = cwdop_noise_floor_dbm(args.nf, args.bw, &pn); s != CWDOP_OK)
        return runtime_failure(s);
    std::printf("received_power_dbm=%.6f\n", pr);
    std::printf("noise_floor_dbm=%.6f\n", pn);
    std::printf("snr_db=%.6f\n", cwdop_snr_db(pr, pn));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cwdop - CW Doppler radar simulator and signal processor"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand(
        "simulate", "Synthesize IF frames for a scenario file");
    simulate->add_option("--scenario", sim.scenario, "scenario file")
        ->required()
        ->check(CLI::ExistingFile);
    simulate->add_option("--out-if", sim.out_if, "write the IF recording (CSV)");
    simulate->add_option("--out-map", sim.out_map, "write the velocity map (CSV)");
    simulate->add_option("--heatmap", sim.heatmap, "write the velocity map heatmap (PGM)");
    simulate->add_option("--seed", sim.seed, "override the scenario noise seed");

    ProcessArgs proc;
    auto* process = app.add_subcommand(
        "process", "Run the velocity pipeline over a recorded IF file");
    process->add_option("--if", proc.if_path, "IF recording to process")
        ->required()
        ->check(CLI::ExistingFile);
    process->add_option("--out-map", proc.out_map, "write the velocity map (CSV)");
    process->add_option("--heatmap", proc.heatmap, "write the velocity map heatmap (PGM)");
    process->add_option("--window", proc.window, "rect|hann (default hann)")
        ->check(CLI::IsMember({"rect", "rectangular", "hann"}));
    process->add_option("--threshold", proc.threshold,
                        "peak threshold, multiple of the median magnitude");

    LinkBudgetArgs lb;
    auto* linkbudget =
        app.add_subcommand("linkbudget", "Received power, noise floor, and SNR");
    linkbudget->add_option("--pt", lb.pt, "TX power, dBm")->required();
    linkbudget->add_option("--gt", lb.gt, "TX gain, dBi")->required();
    linkbudget->add_option("--gr", lb.gr, "RX gain, dBi")->required();
    linkbudget->add_option("--fc", lb.fc, "carrier frequency, Hz")->required();
    linkbudget->add_option("--rcs", lb.rcs, "target cross-section, dBsm")->required();
    linkbudget->add_option("--range", lb.range, "target range, m")->required();
    linkbudget->add_option("--nf", lb.nf, "noise figure, dB (default 10)");
    linkbudget->add_option("--bw", lb.bw, "receiver bandwidth, Hz (default 1500)");

    double vmax_fs = 0.0, vmax_fc = 0.0;
    auto* vmax = app.add_subcommand("vmax", "Maximum unambiguous velocity");
    vmax->add_option("--fs", vmax_fs, "ADC rate, SPS")->required();
    vmax->add_option("--fc", vmax_fc, "carrier frequency, Hz")->required();

    int ant_elements = 8;
    double ant_pitch = 6.56e-3, ant_bend = 0.0, ant_fc = 24.0e9;
    std::string ant_out;
    auto* antenna = app.add_subcommand(
        "antenna", "Directivity cut of a uniform series-fed patch array");
    antenna->add_option("--elements", ant_elements, "element count")->required();
    antenna->add_option("--pitch", ant_pitch, "element pitch, m")->required();
    antenna->add_option("--bend-radius", ant_bend, "cylinder bend radius, m (omit for flat)");
    antenna->add_option("--fc", ant_fc, "frequency, Hz")->required();
    antenna->add_option("--out", ant_out, "output CSV (angle_deg,dbi)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (simulate->parsed()) return run_simulate(sim);
    if (process->parsed()) return run_process(proc);
    if (linkbudget->parsed()) return run_linkbudget(lb);
    if (vmax->parsed()) {
        double out = 0.0;
        if (auto s = cwdop_max_detectable_velocity_mps(vmax_fs, vmax_fc, &out);
            s != CWDOP_OK)
            return runtime_failure(s);
        std::printf("v_max_mps=%.6f\n", out);
        return kExitOk;
    }
    if (antenna->parsed()) {
        if (auto s = cwdop_antenna_pattern_csv(ant_elements, ant_pitch, ant_bend,
                                               ant_fc, ant_out.c_str());
            s != CWDOP_OK)
            return runtime_failure(s);
        return kExitOk;
    }
    return kExitUsage;
}
