#include "sh1d/time_integration.hpp"

#include <cmath>

namespace sh1d {

CflReport cfl_check(const ModalField& field, const RhsContext& ctx, double dt,
                    double cfl_limit) {
    const int n = field.n_cells();
    CflReport report;
    for (int j = 0; j < n; ++j) {
        const StressRegime regime = stress_regime_of_cell(
            field, j, ctx.mesh, ctx.stop.h_semi, ctx.stop.h_eps);
        const double beta_c = beta(ctx.mesh.centers[j], regime, ctx.phys);
        const ConservedState avg{field.h_avg(j), field.q_avg(j)};
        const double speed = max_wave_speed(avg, beta_c, ctx.stop.h_eps);
        report.number = std::max(report.number, speed / ctx.mesh.widths[j] * dt);
    }
    report.violation = report.number > cfl_limit;
    return report;
}

void ssp_rk3_step(ModalField& u, double dt, const RhsFn& rhs_fn, const PostFn& post,
                  Rk3Scratch& scratch) {
    ModalField& w = scratch.stage;
    ModalField& k = scratch.rate;
    auto& wh = w.h_data();
    auto& wq = w.q_data();
    const auto& uh = u.h_data();
    const auto& uq = u.q_data();
    const auto& kh = k.h_data();
    const auto& kq = k.q_data();
    const std::size_t size = uh.size();

    // Stage 1: w = u + dt k.
    rhs_fn(u, k);
    for (std::size_t i = 0; i < size; ++i) {
        wh[i] = uh[i] + dt * kh[i];
        wq[i] = uq[i] + dt * kq[i];
    }
    post(w);

    // Stage 2: w = 3/4 u + 1/4 (w + dt k) = u + 1/4 ((w - u) + dt k).
    rhs_fn(w, k);
    for (std::size_t i = 0; i < size; ++i) {
        wh[i] = uh[i] + 0.25 * ((wh[i] - uh[i]) + dt * kh[i]);
        wq[i] = uq[i] + 0.25 * ((wq[i] - uq[i]) + dt * kq[i]);
    }
    post(w);

    // Stage 3: u = 1/3 u + 2/3 (w + dt k) = u + 2/3 ((w - u) + dt k).
    rhs_fn(w, k);
    auto& out_h = u.h_data();
    auto& out_q = u.q_data();
    for (std::size_t i = 0; i < size; ++i) {
        out_h[i] = uh[i] + (2.0 / 3.0) * ((wh[i] - uh[i]) + dt * kh[i]);
        out_q[i] = uq[i] + (2.0 / 3.0) * ((wq[i] - uq[i]) + dt * kq[i]);
    }
    post(u);
}

}  // namespace sh1d
