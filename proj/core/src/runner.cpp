#include "sh1d/runner.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

namespace sh1d {

namespace {

std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

DepthProfile make_initial_profile(const InitialConfig& initial) {
    switch (initial.shape) {
        case InitialShape::Semicircle:
            return semicircle_profile(initial.r0, initial.x0);
        case InitialShape::Parabola:
            return parabola_profile(initial.amplitude, initial.r0, initial.x0);
        case InitialShape::Gaussian:
            return gaussian_profile(initial.base, initial.amplitude, initial.r0,
                                    initial.x0);
    }
    throw std::logic_error("make_initial_profile: unreachable");
}

StepDriver::StepDriver(Mesh mesh, const PhysicalParams& phys,
                       const StoppingParams& stop, const LimiterParams& lim)
    : ctx_(make_rhs_context(mesh, phys, stop)),
      limiter_(lim),
      field_(mesh.n_cells()),
      flags_(mesh.n_cells()),
      scratch_(mesh.n_cells()) {}

void StepDriver::post_stage(ModalField& f) {
    limit_field(f, limiter_);
    const ClampReport r = clamp_negative_depth(f, ctx_.mesh);
    clamp_.mass_added += r.mass_added;
    clamp_.cells_clamped += r.cells_clamped;
    clamp_.worst_depth = std::min(clamp_.worst_depth, r.worst_depth);
    classify(f, flags_, ctx_.stop);
    fix_semiwet(f, flags_, ctx_.stop);
    repose_test(f, flags_, ctx_.phys, ctx_.stop, ctx_.mesh);
}

void StepDriver::initialize(ModalField initial) {
    if (!initial.same_shape(field_)) {
        throw std::invalid_argument("StepDriver::initialize: field size mismatch");
    }
    field_ = std::move(initial);
    post_stage(field_);
}

void StepDriver::advance(double dt) {
    ssp_rk3_step(
        field_, dt,
        [this](const ModalField& u, ModalField& rates) { rhs(u, flags_, ctx_, rates); },
        [this](ModalField& f) { post_stage(f); }, scratch_);
}

CflReport StepDriver::check_cfl(double dt) const {
    return cfl_check(field_, ctx_, dt);
}

double StepDriver::total_mass() const {
    double mass = 0.0;
    for (int j = 0; j < field_.n_cells(); ++j) {
        mass += field_.h_avg(j) * ctx_.mesh.widths[j];
    }
    return mass;
}

double StepDriver::max_depth() const {
    double depth = 0.0;
    for (int j = 0; j < field_.n_cells(); ++j) {
        depth = std::max(depth, field_.h_avg(j));
    }
    return depth;
}

double StepDriver::max_speed() const {
    double speed = 0.0;
    for (int j = 0; j < field_.n_cells(); ++j) {
        speed = std::max(speed, std::abs(velocity(field_.h_avg(j), field_.q_avg(j),
                                                  ctx_.stop.h_eps)));
    }
    return speed;
}

double StepDriver::front_position() const {
    for (int j = field_.n_cells() - 1; j >= 0; --j) {
        if (flags_[j].wetness == Wetness::Wet) {
            return to_physical(ctx_.mesh.centers[j], field_.h_avg(j), ctx_.phys).x_b;
        }
    }
    return 0.0;
}

SimulationResult simulate(const RunConfig& cfg, const SnapshotHook& on_snapshot) {
    validate(cfg);
    const auto wall_start = std::chrono::steady_clock::now();

    Mesh mesh = Mesh::uniform(cfg.domain_length, cfg.n_cells);
    StepDriver driver(mesh, cfg.physical, cfg.stopping, cfg.limiter);
    driver.initialize(project_initial(make_initial_profile(cfg.initial), mesh));

    const double dt = cfg.time.dt;
    const long n_steps = std::lround(cfg.time.t_end / dt);
    if (std::abs(n_steps * dt - cfg.time.t_end) > 1e-9 * std::max(1.0, cfg.time.t_end)) {
        throw std::runtime_error("simulate: t_end must be a multiple of dt");
    }

    // Snapshot times resolve to step indices; the label keeps the requested
    // value so filenames and headers stay clean.
    std::map<long, double> snapshot_steps;
    for (double t : cfg.output.snapshot_times) {
        const long step = std::lround(t / dt);
        if (std::abs(step * dt - t) > 1e-9 * std::max(1.0, cfg.time.t_end)) {
            throw std::runtime_error("simulate: snapshot time " + format_label(t) +
                                     " is not a multiple of dt");
        }
        snapshot_steps[std::min(step, n_steps)] = t;
    }

    RunSummary summary;
    bool warned_cfl = false;
    auto record = [&](double t) {
        summary.times.push_back(t);
        summary.mass.push_back(driver.total_mass());
        summary.max_depth.push_back(driver.max_depth());
        summary.max_speed.push_back(driver.max_speed());
        summary.front_position.push_back(driver.front_position());
        summary.clamp_mass.push_back(driver.clamp_total().mass_added);
    };
    auto maybe_snapshot = [&](long step) {
        if (!on_snapshot) return;
        auto it = snapshot_steps.find(step);
        if (it != snapshot_steps.end()) on_snapshot(driver, it->second);
    };

    record(0.0);
    maybe_snapshot(0);

    for (long step = 0; step < n_steps; ++step) {
        const CflReport cfl = driver.check_cfl(dt);
        summary.cfl_max = std::max(summary.cfl_max, cfl.number);
        double dt_step = dt;
        if (cfl.violation) {
            summary.cfl_violations += 1;
            if (cfg.time.strict_cfl) {
                throw std::runtime_error(
                    "simulate: CFL violation at t = " + format_label(step * dt) +
                    " (CFL " + format_label(cfl.number) + ")");
            }
            if (cfg.time.adaptive) {
                // Shrink this step only; the step count is fixed, so the
                // remainder of the nominal step is taken at the reduced dt.
                const double scale = 0.95 / (cfl.number / cfg.time.cfl_limit);
                dt_step = dt * scale;
            } else if (!warned_cfl) {
                std::fprintf(stderr,
                             "warning: CFL %.3g exceeds limit %.3g at t = %s\n",
                             cfl.number, cfg.time.cfl_limit,
                             format_label(step * dt).c_str());
                warned_cfl = true;
            }
        }
        if (cfg.time.adaptive && dt_step < dt) {
            double advanced = 0.0;
            while (advanced < dt - 1e-15 * dt) {
                const double sub = std::min(dt_step, dt - advanced);
                driver.advance(sub);
                advanced += sub;
            }
        } else {
            driver.advance(dt);
        }

        const double t = (step + 1) * dt;
        if ((step + 1) % cfg.output.record_every == 0 || step + 1 == n_steps) {
            record(t);
        }
        maybe_snapshot(step + 1);
    }

    summary.n_steps = n_steps;
    summary.clamp_mass_total = driver.clamp_total().mass_added;
    summary.clamp_cells_total = driver.clamp_total().cells_clamped;
    for (std::size_t i = summary.times.size(); i-- > 0;) {
        if (summary.max_speed[i] < kSteadySpeed) {
            summary.steady_time = summary.times[i];
        } else {
            break;
        }
    }
    summary.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start)
            .count();

    return SimulationResult{std::move(summary), std::move(mesh), driver.field(),
                            driver.flags()};
}

void write_snapshot(const ModalField& field, const std::vector<CellFlags>& flags,
                    double t, const Mesh& mesh, const PhysicalParams& phys,
                    const StoppingParams& stop, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_snapshot: cannot open " + path);
    out << "# t = " << format_full(t) << "\n";
    out << "x,h,u,mstop,wet,xb,yb,surf_x,surf_y\n";
    for (int j = 0; j < field.n_cells(); ++j) {
        const double h = field.h_avg(j);
        const double u = velocity(h, field.q_avg(j), stop.h_eps);
        const PhysicalPoint p = to_physical(mesh.centers[j], h, phys);
        out << format_full(mesh.centers[j]) << ',' << format_full(h) << ','
            << format_full(u) << ',' << flags[j].m_stop << ','
            << static_cast<int>(flags[j].wetness) << ',' << format_full(p.x_b) << ','
            << format_full(p.y_b) << ',' << format_full(p.x_b + p.h_xb) << ','
            << format_full(p.y_b + p.h_yb) << '\n';
    }
    if (!out) throw std::runtime_error("write_snapshot: write failed for " + path);
}

void write_summary(const RunSummary& summary, const std::string& path) {
    nlohmann::json j;
    j["times"] = summary.times;
    j["mass"] = summary.mass;
    j["max_depth"] = summary.max_depth;
    j["max_speed"] = summary.max_speed;
    j["front_position"] = summary.front_position;
    j["clamp_mass"] = summary.clamp_mass;
    j["cfl_max"] = summary.cfl_max;
    j["cfl_violations"] = summary.cfl_violations;
    j["clamp_mass_total"] = summary.clamp_mass_total;
    j["clamp_cells_total"] = summary.clamp_cells_total;
    j["steady_time"] = summary.steady_time;
    j["wall_clock_seconds"] = summary.wall_clock_seconds;
    j["n_steps"] = summary.n_steps;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_summary: cannot open " + path);
    out << j.dump(2) << "\n";
}

void write_bed_profile(const Mesh& mesh, const PhysicalParams& phys,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_bed_profile: cannot open " + path);
    out << "x,xb,yb,bed_sketch\n";
    for (int j = 0; j < mesh.n_cells(); ++j) {
        const double x = mesh.centers[j];
        const PhysicalPoint p = to_physical(x, 0.0, phys);
        out << format_full(x) << ',' << format_full(p.x_b) << ','
            << format_full(p.y_b) << ',' << format_full(bed_sketch(x, phys)) << '\n';
    }
}

RunSummary run_case(const RunConfig& cfg) {
    namespace fs = std::filesystem;
    const fs::path dir(cfg.output.directory);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("run_case: cannot create output directory '" +
                                 dir.string() + "': " + ec.message());
    }

    SimulationResult result =
        simulate(cfg, [&](const StepDriver& driver, double t_label) {
            const fs::path file =
                dir / ("snapshot_t" + format_label(t_label) + ".csv");
            write_snapshot(driver.field(), driver.flags(), t_label, driver.mesh(),
                           cfg.physical, cfg.stopping, file.string());
        });

    write_bed_profile(result.mesh, cfg.physical, (dir / "bed.csv").string());
    write_summary(result.summary, (dir / "summary.json").string());
    return result.summary;
}

}  // namespace sh1d
