// Command-line driver: runs one avalanche simulation from a config file or
// a built-in parameter-study preset and writes snapshots plus a summary.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "sh1d/config.hpp"
#include "sh1d/runner.hpp"

namespace {

std::vector<double> parse_snapshot_list(const std::string& csv) {
    std::vector<double> times;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        times.push_back(std::stod(item));
    }
    return times;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-dimensional granular avalanche simulator (Savage-Hutter, RKDG)"};

    std::string config_path;
    int case_number = 0;
    std::string out_dir;
    int n_cells = 0;
    double t_end = -1.0;
    std::string snap_csv;
    bool strict_cfl = false;
    bool adaptive = false;

    auto* config_opt = app.add_option("--config", config_path, "Configuration file (INI)");
    auto* case_opt =
        app.add_option("--case", case_number, "Built-in case preset")->check(CLI::Range(1, 4));
    config_opt->excludes(case_opt);
    app.add_option("--out", out_dir, "Output directory (default: out)");
    app.add_option("--n-cells", n_cells, "Override the cell count");
    app.add_option("--t-end", t_end, "Override the final time");
    app.add_option("--snap", snap_csv, "Snapshot times, comma separated");
    app.add_flag("--strict-cfl", strict_cfl, "Abort on a CFL violation");
    app.add_flag("--adaptive", adaptive, "Shrink dt when the CFL limit is exceeded");

    CLI11_PARSE(app, argc, argv);

    try {
        sh1d::RunConfig cfg;
        if (!config_path.empty()) {
            cfg = sh1d::load_config(config_path);
        } else if (case_number != 0) {
            cfg = sh1d::case_preset(case_number);
        } else {
            std::fprintf(stderr, "error: provide --config PATH or --case {1,2,3,4}\n");
            return 1;
        }
        if (!out_dir.empty()) cfg.output.directory = out_dir;
        if (n_cells > 0) cfg.n_cells = n_cells;
        if (t_end >= 0.0) cfg.time.t_end = t_end;
        if (!snap_csv.empty()) {
            cfg.output.snapshot_times = parse_snapshot_list(snap_csv);
        } else if (t_end >= 0.0) {
            sh1d::clip_snapshot_times(cfg);
        }
        if (strict_cfl) cfg.time.strict_cfl = true;
        if (adaptive) cfg.time.adaptive = true;
        sh1d::validate(cfg);

        const sh1d::RunSummary summary = sh1d::run_case(cfg);

        const double mass0 = summary.mass.front();
        const double mass_end = summary.mass.back();
        std::printf("steps:            %ld\n", summary.n_steps);
        std::printf("final time:       %g\n", summary.times.back());
        std::printf("max depth:        %.6g\n", summary.max_depth.back());
        std::printf("max |u|:          %.6g\n", summary.max_speed.back());
        std::printf("front position:   %.6g\n", summary.front_position.back());
        std::printf("mass drift:       %.3e (relative)\n",
                    mass0 != 0.0 ? (mass_end - mass0) / mass0 : 0.0);
        std::printf("clamp correction: %.3e (%ld cells)\n", summary.clamp_mass_total,
                    summary.clamp_cells_total);
        std::printf("max CFL:          %.4g (%ld violations)\n", summary.cfl_max,
                    summary.cfl_violations);
        if (summary.steady_time >= 0.0) {
            std::printf("at rest since:    t = %g\n", summary.steady_time);
        }
        std::printf("wall clock:       %.2f s\n", summary.wall_clock_seconds);
        std::printf("output:           %s\n", cfg.output.directory.c_str());
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
