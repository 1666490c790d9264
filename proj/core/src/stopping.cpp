#include "sh1d/stopping.hpp"

#include <cmath>

#include "sh1d/dg_rhs.hpp"

namespace sh1d {

void classify(ModalField& field, std::vector<CellFlags>& flags,
              const StoppingParams& params) {
    const int n = field.n_cells();
    flags.resize(n);
    for (int j = 0; j < n; ++j) {
        const double h = field.h_avg(j);
        if (h <= params.h_eps) {
            flags[j].wetness = Wetness::Dry;
            field.zero_q_modes(j);
        } else if (h < params.h_semi) {
            flags[j].wetness = Wetness::SemiWet;
        } else {
            flags[j].wetness = Wetness::Wet;
        }
    }
}

void fix_semiwet(ModalField& field, const std::vector<CellFlags>& flags,
                 const StoppingParams& params) {
    const int n = field.n_cells();
    // Snapshot of averages before any write; neighbors past the boundary
    // mirror the boundary cell.
    std::vector<double> h_avg(n), u_avg(n);
    for (int j = 0; j < n; ++j) {
        h_avg[j] = field.h_avg(j);
        u_avg[j] = velocity(h_avg[j], field.q_avg(j), params.h_eps);
    }
    for (int j = 0; j < n; ++j) {
        if (flags[j].wetness != Wetness::SemiWet) continue;
        const int jl = j > 0 ? j - 1 : j;
        const int jr = j < n - 1 ? j + 1 : j;
        double u;
        if (h_avg[jl] < params.h_semi && h_avg[jr] < params.h_semi) {
            u = 0.0;
        } else if (h_avg[jl] >= h_avg[jr]) {
            u = u_avg[jl];
        } else {
            u = u_avg[jr];
        }
        field.q(j, 0) = h_avg[j] * u;
        field.q(j, 1) = 0.0;
        field.q(j, 2) = 0.0;
    }
}

ReposeForces repose_forces(const ModalField& field, int j,
                           const PhysicalParams& phys, const StoppingParams& params,
                           const Mesh& mesh) {
    const int n = field.n_cells();
    const double dx = mesh.widths[j];
    const double h_c = field.h_avg(j);
    const double h_l = j > 0 ? field.h_avg(j - 1) : h_c;
    const double h_r = j < n - 1 ? field.h_avg(j + 1) : h_c;
    const bool mat_l = j > 0 && h_l > params.h_eps;
    const bool mat_r = j < n - 1 && h_r > params.h_eps;

    double grad_h = 0.0;
    if (mat_l && mat_r) {
        grad_h = (h_r - h_l) / (2.0 * dx);
    } else if (mat_r) {
        grad_h = (h_r - h_c) / dx;
    } else if (mat_l) {
        grad_h = (h_c - h_l) / dx;
    }

    const double x = mesh.centers[j];
    const double u = velocity(h_c, field.q_avg(j), params.h_eps);
    const StressRegime regime =
        stress_regime_of_cell(field, j, mesh, params.h_semi, params.h_eps);
    const double z = zeta(x, phys);

    ReposeForces f;
    f.driving = std::sin(z) - beta(x, regime, phys) * grad_h;
    f.ceiling = std::tan(phys.delta) *
                std::max(0.0, std::cos(z) + phys.chi * kappa(x, phys) * u * u);
    return f;
}

void repose_test(ModalField& field, std::vector<CellFlags>& flags,
                 const PhysicalParams& phys, const StoppingParams& params,
                 const Mesh& mesh) {
    const int n = field.n_cells();
    for (int j = 0; j < n; ++j) {
        if (flags[j].wetness == Wetness::Dry) {
            flags[j].m_stop = 0;
            continue;
        }
        const double u = velocity(field.h_avg(j), field.q_avg(j), params.h_eps);
        bool resting = std::abs(u) <= params.u_stop;
        if (resting) {
            const ReposeForces f = repose_forces(field, j, phys, params, mesh);
            resting = std::abs(f.driving) <= f.ceiling;
        }
        flags[j].m_stop = resting ? 0 : 1;
        if (resting) field.zero_q_modes(j);
    }
}

ClampReport clamp_negative_depth(ModalField& field, const Mesh& mesh) {
    ClampReport report;
    const int n = field.n_cells();
    for (int j = 0; j < n; ++j) {
        const double h = field.h_avg(j);
        if (h < 0.0) {
            report.mass_added += -h * mesh.widths[j];
            report.cells_clamped += 1;
            report.worst_depth = std::min(report.worst_depth, h);
            field.h(j, 0) = 0.0;
            field.h(j, 1) = 0.0;
            field.h(j, 2) = 0.0;
            field.zero_q_modes(j);
        }
    }
    return report;
}

}  // namespace sh1d
