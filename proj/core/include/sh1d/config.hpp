#pragma once

#include <string>
#include <vector>

#include "sh1d/limiter.hpp"
#include "sh1d/physics.hpp"
#include "sh1d/stopping.hpp"
#include "sh1d/time_integration.hpp"

namespace sh1d {

enum class InitialShape { Semicircle, Parabola, Gaussian };

struct InitialConfig {
    InitialShape shape = InitialShape::Semicircle;
    double x0 = 4.0;
    double r0 = 1.85;        // radius / half-width / sigma, by shape
    double amplitude = 0.0;  // parabola and gaussian; semicircle peaks at r0
    double base = 0.0;       // gaussian floor
};

struct OutputConfig {
    std::string directory = "out";
    std::vector<double> snapshot_times = {0.0, 12.0, 24.0, 36.0, 48.0};
    int record_every = 100;  // summary-series cadence in steps
};

struct RunConfig {
    PhysicalParams physical;
    double domain_length = 30.0;
    int n_cells = 256;
    int degree = 2;
    TimeParams time;
    LimiterParams limiter;
    StoppingParams stopping;
    InitialConfig initial;
    OutputConfig output;
};

/// Parses an INI-style configuration with sections [physical], [numerical],
/// [initial], [output]. Angles are given in degrees and stored in radians.
/// Throws std::runtime_error naming every missing or invalid field.
RunConfig load_config(const std::string& path);

/// The four built-in parameter-study presets (1..4), differing in the
/// inclination and friction angles.
RunConfig case_preset(int case_number);

/// Drops snapshot times beyond t_end; applied to the stock times when the
/// user shortens a run without listing their own.
void clip_snapshot_times(RunConfig& config);

void validate(const RunConfig& config);

}  // namespace sh1d
