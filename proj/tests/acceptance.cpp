// Acceptance suite: one pass/fail line per criterion.
//
//   1-4  parameter-study reproductions (final depth, steadiness, run-out)
//   5    discrete mass conservation net of the logged clamp correction
//   6    reposing pile is a bit-exact fixed point over 10,000 steps
//   7    L1 self-convergence order >= 2.5 on a smooth frictionless setup
//   8    unit oracles (minmod, quadrature, mass matrix, basis, flux, seams)

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sh1d/basis.hpp"
#include "sh1d/config.hpp"
#include "sh1d/geometry.hpp"
#include "sh1d/limiter.hpp"
#include "sh1d/runner.hpp"

using namespace sh1d;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %d (%s): %s  [%s]\n", index, name.c_str(),
                pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double value_at_time(const RunSummary& s, const std::vector<double>& series, double t) {
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        if (std::abs(s.times[i] - t) < 1e-9) return series[i];
    }
    return std::numeric_limits<double>::quiet_NaN();
}

bool steady_from(const RunSummary& s, double t) {
    bool seen = false;
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        if (s.times[i] >= t - 1e-9) {
            seen = true;
            if (s.max_speed[i] >= kSteadySpeed) return false;
        }
    }
    return seen;
}

SimulationResult run_study_case(int number) {
    RunConfig cfg = case_preset(number);
    cfg.output.snapshot_times = {};
    cfg.output.record_every = 250;
    std::printf("running case %d (N=%d, dt=%g, t_end=%g) ...\n", number, cfg.n_cells,
                cfg.time.dt, cfg.time.t_end);
    std::fflush(stdout);
    return simulate(cfg);
}

// ---------------------------------------------------------------------------
// Criterion 7 helpers: restriction of fine cell averages onto the coarser
// mesh (exact for averages under 2:1 refinement) and the windowed L1 norm.

std::vector<double> averages(const SimulationResult& r) {
    std::vector<double> a(r.field.n_cells());
    for (int j = 0; j < r.field.n_cells(); ++j) a[j] = r.field.h_avg(j);
    return a;
}

double l1_window_diff(const std::vector<double>& coarse, const std::vector<double>& fine,
                      double length, double lo, double hi) {
    const int n = static_cast<int>(coarse.size());
    const double dx = length / n;
    double err = 0.0;
    for (int j = 0; j < n; ++j) {
        const double xc = (j + 0.5) * dx;
        if (xc < lo || xc > hi) continue;
        const double restricted = 0.5 * (fine[2 * j] + fine[2 * j + 1]);
        err += std::abs(coarse[j] - restricted) * dx;
    }
    return err;
}

SimulationResult run_smooth(int n_cells) {
    RunConfig cfg;
    cfg.physical.zeta0 = 0.0;
    cfg.physical.phi = 0.0;
    cfg.physical.delta = 0.0;  // K = 1 everywhere: constant beta = epsilon
    cfg.n_cells = n_cells;
    cfg.time.dt = 0.1 * cfg.domain_length / n_cells;  // fixed CFL across meshes
    cfg.time.t_end = 1.5;
    // gamma = 1 leaves smooth monotone data unlimited; the strict 0.5
    // default trims mode 2 wherever the profile curves and would cap the
    // measured order near 2.
    cfg.limiter.gamma = 1.0;
    cfg.initial.shape = InitialShape::Gaussian;
    cfg.initial.x0 = 15.0;
    cfg.initial.r0 = 3.0;  // sigma
    cfg.initial.amplitude = 0.4;
    cfg.initial.base = 1.0;
    cfg.output.snapshot_times = {};
    cfg.output.record_every = 1000000;
    return simulate(cfg);
}

// ---------------------------------------------------------------------------

void criteria_1_to_5() {
    std::map<int, SimulationResult> cases;
    for (int c = 1; c <= 4; ++c) cases.emplace(c, run_study_case(c));

    const RunSummary& s1 = cases.at(1).summary;
    const RunSummary& s2 = cases.at(2).summary;
    const RunSummary& s3 = cases.at(3).summary;
    const RunSummary& s4 = cases.at(4).summary;

    const double d1 = value_at_time(s1, s1.max_depth, 48.0);
    const double d2 = value_at_time(s2, s2.max_depth, 48.0);
    const double d3 = value_at_time(s3, s3.max_depth, 48.0);
    const double d4 = value_at_time(s4, s4.max_depth, 48.0);
    const double u1 = value_at_time(s1, s1.max_speed, 48.0);
    const double f1 = value_at_time(s1, s1.front_position, 48.0);
    const double f2 = value_at_time(s2, s2.front_position, 48.0);
    const double f4 = value_at_time(s4, s4.front_position, 48.0);

    report(1, "case I final deposit", d1 >= 2.25 && d1 <= 2.75 && u1 < 1e-3,
           "max depth " + fmt(d1) + " in [2.25, 2.75], max |u| " + fmt(u1) + " < 1e-3");

    report(2, "case II fluidized run-out",
           d2 >= 1.6 && d2 <= 2.0 && steady_from(s2, 24.0) && f2 > f1,
           "max depth " + fmt(d2) + " in [1.6, 2.0], steady from t=24: " +
               (steady_from(s2, 24.0) ? "yes" : "no") + ", front " + fmt(f2) + " > " +
               fmt(f1));

    report(3, "case III weak phi sensitivity",
           std::abs(d3 - d1) < std::abs(d2 - d1) && d3 <= d1,
           "|d3-d1| = " + fmt(std::abs(d3 - d1)) + " < |d2-d1| = " +
               fmt(std::abs(d2 - d1)) + ", d3 = " + fmt(d3) + " <= d1 = " + fmt(d1));

    report(4, "case IV steeper chute", steady_from(s4, 24.0) && f4 > f1 && d4 > d1,
           "steady from t=24: " + std::string(steady_from(s4, 24.0) ? "yes" : "no") +
               ", front " + fmt(f4) + " > " + fmt(f1) + ", max depth " + fmt(d4) +
               " > " + fmt(d1));

    bool mass_ok = true;
    std::string mass_detail;
    for (int c = 1; c <= 4; ++c) {
        const RunSummary& s = cases.at(c).summary;
        const double m0 = s.mass.front();
        double worst = 0.0;
        for (std::size_t i = 0; i < s.times.size(); ++i) {
            worst = std::max(worst, std::abs(s.mass[i] - m0 - s.clamp_mass[i]) / m0);
        }
        const double clamp_rel = s.clamp_mass_total / m0;
        mass_ok = mass_ok && worst <= 1e-12 && clamp_rel < 1e-10;
        mass_detail += "case " + std::to_string(c) + ": drift " + fmt(worst) +
                       ", clamp " + fmt(clamp_rel) + (c < 4 ? "; " : "");
    }
    report(5, "mass conservation", mass_ok, mass_detail);
}

void criterion_6() {
    RunConfig cfg = case_preset(1);
    Mesh mesh = Mesh::uniform(cfg.domain_length, cfg.n_cells);
    StepDriver driver(mesh, cfg.physical, cfg.stopping, cfg.limiter);

    // Gentle pile on the horizontal run-out: slopes far below the Coulomb
    // bound, so the repose criterion holds in every cell at t = 0.
    driver.initialize(project_initial(parabola_profile(0.05, 2.0, 26.0), mesh));

    bool all_resting = true;
    for (const CellFlags& f : driver.flags()) all_resting &= f.m_stop == 0;

    const std::vector<double> h0 = driver.field().h_data();
    const int steps = 10000;
    for (int i = 0; i < steps; ++i) driver.advance(cfg.time.dt);

    double max_dh = 0.0;
    const std::vector<double>& h1 = driver.field().h_data();
    for (std::size_t i = 0; i < h0.size(); ++i) {
        max_dh = std::max(max_dh, std::abs(h1[i] - h0[i]));
    }
    const bool bitwise = h1 == h0;
    double max_q = 0.0;
    for (double v : driver.field().q_data()) max_q = std::max(max_q, std::abs(v));

    report(6, "well-balanced repose", all_resting && bitwise && max_q == 0.0,
           std::string("all resting at t=0: ") + (all_resting ? "yes" : "no") +
               ", max |h - h0| = " + fmt(max_dh) + " over 10000 steps, max |q| = " +
               fmt(max_q));
}

void criterion_7() {
    const SimulationResult r64 = run_smooth(64);
    const SimulationResult r128 = run_smooth(128);
    const SimulationResult r256 = run_smooth(256);
    const double e_coarse =
        l1_window_diff(averages(r64), averages(r128), 30.0, 5.0, 25.0);
    const double e_fine =
        l1_window_diff(averages(r128), averages(r256), 30.0, 5.0, 25.0);
    const double order = std::log2(e_coarse / e_fine);
    report(7, "self-convergence order", order >= 2.5,
           "L1(64 vs 128) = " + fmt(e_coarse) + ", L1(128 vs 256) = " + fmt(e_fine) +
               ", order " + fmt(order) + " >= 2.5");
}

void criterion_8() {
    bool ok = true;
    std::string first_bad;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond && first_bad.empty()) first_bad = what;
        ok = ok && cond;
    };
    const double tol = 1e-12;

    expect(minmod(1.0, 2.0, 3.0) == 1.0, "minmod common sign");
    expect(minmod(1.0, -2.0, 3.0) == 0.0, "minmod mixed sign");
    expect(minmod(-0.5, -2.0, -1.0) == -0.5, "minmod negative");

    expect(std::abs(basis::kGaussXi[2] - std::sqrt(3.0 / 5.0)) <= tol, "gauss node");
    expect(basis::kGaussXi[1] == 0.0, "gauss center node");
    expect(std::abs(basis::kGaussWeight[0] - 5.0 / 18.0) <= tol, "gauss weight 0");
    expect(std::abs(basis::kGaussWeight[1] - 8.0 / 18.0) <= tol, "gauss weight 1");

    const auto mm = basis::mass_matrix(2, 0.75);
    expect(std::abs(mm[0] - 0.75) <= tol && std::abs(mm[1] - 0.25) <= tol &&
               std::abs(mm[2] - 0.15) <= tol,
           "mass matrix diagonal");

    expect(std::abs(basis::value(2, 0.0) + 0.5) <= tol, "phi2 center");
    expect(std::abs(basis::value(1, 1.0) - 1.0) <= tol, "phi1 right edge");
    expect(std::abs(basis::value(2, -1.0) - 1.0) <= tol, "phi2 left edge");

    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> hdist(1e-3, 3.0);
    std::uniform_real_distribution<double> udist(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const double h = hdist(rng);
        const ConservedState u{h, h * udist(rng)};
        const FluxPair consistent = llf_flux(u, u, 0.4, 0.4, 1);
        const FluxPair exact = flux(u, 0.4);
        expect(std::abs(consistent.mass - exact.mass) <= tol * (1.0 + std::abs(exact.mass)),
               "llf mass consistency");
        expect(std::abs(consistent.momentum - exact.momentum) <=
                   tol * (1.0 + std::abs(exact.momentum)),
               "llf momentum consistency");
    }

    for (double zeta0_deg : {35.0, 40.0}) {
        PhysicalParams p;
        p.zeta0 = zeta0_deg * M_PI / 180.0;
        for (double seam : {17.5, 21.5}) {
            const PhysicalPoint a = to_physical(std::nextafter(seam, 0.0), 0.8, p);
            const PhysicalPoint b = to_physical(seam, 0.8, p);
            expect(std::abs(a.x_b - b.x_b) <= tol && std::abs(a.y_b - b.y_b) <= tol &&
                       std::abs(a.h_xb - b.h_xb) <= tol &&
                       std::abs(a.h_yb - b.h_yb) <= tol,
                   "seam continuity at " + fmt(seam));
        }
    }

    report(8, "unit oracles", ok, ok ? "minmod/quadrature/mass-matrix/basis/llf/seams"
                                     : "first failure: " + first_bad);
}

}  // namespace

int main() {
    criteria_1_to_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    }
    return g_failures;
}
