#pragma once

#include <functional>

#include "sh1d/dg_rhs.hpp"
#include "sh1d/modal_field.hpp"

namespace sh1d {

struct TimeParams {
    double dt = 1e-3;
    double t_end = 48.0;
    double cfl_limit = 1.0 / (2.0 * basis::kDegree + 1.0);
    bool adaptive = false;    // shrink dt to honor cfl_limit when set
    bool strict_cfl = false;  // abort instead of warn on a violation
};

struct CflReport {
    double number = 0.0;
    bool violation = false;
};

/// CFL number max_j (max |lambda| / dx_j) * dt from cell-average states,
/// flagged against 1/(2k+1).
CflReport cfl_check(const ModalField& field, const RhsContext& ctx, double dt,
                    double cfl_limit = 1.0 / (2.0 * basis::kDegree + 1.0));

using RhsFn = std::function<void(const ModalField&, ModalField&)>;
using PostFn = std::function<void(ModalField&)>;

// Scratch fields for the three-stage step, sized once per run.
struct Rk3Scratch {
    explicit Rk3Scratch(int n_cells) : stage(n_cells), rate(n_cells) {}
    ModalField stage;
    ModalField rate;
};

/// One step of the optimal third-order SSP Runge-Kutta scheme
///   u1 = u + dt L(u); u2 = 3/4 u + 1/4 (u1 + dt L(u1));
///   u  = 1/3 u + 2/3 (u2 + dt L(u2)),
/// with `post` applied after every stage. The convex combinations are
/// accumulated in increment form, so a state with identically zero rates
/// is reproduced bit-exactly.
void ssp_rk3_step(ModalField& u, double dt, const RhsFn& rhs_fn, const PostFn& post,
                  Rk3Scratch& scratch);

}  // namespace sh1d
