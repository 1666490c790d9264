#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sh1d/config.hpp"
#include "sh1d/dg_rhs.hpp"
#include "sh1d/geometry.hpp"
#include "sh1d/limiter.hpp"
#include "sh1d/mesh.hpp"
#include "sh1d/modal_field.hpp"
#include "sh1d/projection.hpp"
#include "sh1d/stopping.hpp"
#include "sh1d/time_integration.hpp"

namespace sh1d {

DepthProfile make_initial_profile(const InitialConfig& initial);

// Owns the state and the per-stage pipeline: RK stage update -> limiter ->
// negative-depth clamp -> wet/dry classification -> semi-wet fix -> repose
// test. The same pipeline runs once on the initial data.
class StepDriver {
  public:
    StepDriver(Mesh mesh, const PhysicalParams& phys, const StoppingParams& stop,
               const LimiterParams& lim);

    void initialize(ModalField initial);
    void advance(double dt);

    CflReport check_cfl(double dt) const;

    const Mesh& mesh() const { return ctx_.mesh; }
    const RhsContext& context() const { return ctx_; }
    const ModalField& field() const { return field_; }
    const std::vector<CellFlags>& flags() const { return flags_; }
    const ClampReport& clamp_total() const { return clamp_; }

    double total_mass() const;
    double max_depth() const;
    double max_speed() const;
    /// Horizontal position of the rightmost wet cell's center, 0 when none.
    double front_position() const;

  private:
    void post_stage(ModalField& f);

    RhsContext ctx_;
    LimiterParams limiter_;
    ModalField field_;
    std::vector<CellFlags> flags_;
    Rk3Scratch scratch_;
    ClampReport clamp_;
};

struct RunSummary {
    std::vector<double> times;
    std::vector<double> mass;
    std::vector<double> max_depth;
    std::vector<double> max_speed;
    std::vector<double> front_position;
    std::vector<double> clamp_mass;  // cumulative at each record
    double cfl_max = 0.0;
    long cfl_violations = 0;
    double clamp_mass_total = 0.0;
    long clamp_cells_total = 0;
    double steady_time = -1.0;  // first recorded t from which max_speed stays < 1e-3
    double wall_clock_seconds = 0.0;
    long n_steps = 0;
};

/// max_speed threshold below which a record counts as "at rest".
inline constexpr double kSteadySpeed = 1e-3;

using SnapshotHook =
    std::function<void(const StepDriver&, double t_label)>;

struct SimulationResult {
    RunSummary summary;
    Mesh mesh;
    ModalField field;
    std::vector<CellFlags> flags;
};

/// Projects the configured initial pile, runs the limited initial state to
/// t_end, and invokes `on_snapshot` at every configured snapshot time.
/// Deterministic: a config maps to one bit-exact trajectory.
SimulationResult simulate(const RunConfig& cfg, const SnapshotHook& on_snapshot = {});

/// One row per cell: x,h,u,mstop,wet,xb,yb,surf_x,surf_y with full-precision
/// numbers (wetness encoded 0 dry, 1 semi-wet, 2 wet).
void write_snapshot(const ModalField& field, const std::vector<CellFlags>& flags,
                    double t, const Mesh& mesh, const PhysicalParams& phys,
                    const StoppingParams& stop, const std::string& path);

void write_summary(const RunSummary& summary, const std::string& path);

/// Reference-surface and bed-sketch profile for figure annotation.
void write_bed_profile(const Mesh& mesh, const PhysicalParams& phys,
                       const std::string& path);

/// Full run driver behind the CLI: simulate, write snapshots, the bed
/// profile, and summary.json into cfg.output.directory.
RunSummary run_case(const RunConfig& cfg);

}  // namespace sh1d
