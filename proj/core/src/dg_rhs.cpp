#include "sh1d/dg_rhs.hpp"

#include <algorithm>
#include <cmath>

namespace sh1d {

FluxPair llf_flux(const ConservedState& left, const ConservedState& right,
                  double beta_left, double beta_right, int eta, double h_eps) {
    const FluxPair fl = flux(left, beta_left, h_eps);
    const FluxPair fr = flux(right, beta_right, h_eps);
    const double alpha = std::max(max_wave_speed(left, beta_left, h_eps),
                                  max_wave_speed(right, beta_right, h_eps));
    FluxPair f;
    f.mass = 0.5 * (fl.mass + fr.mass);
    if (eta != 0) {
        f.mass -= 0.5 * alpha * (right.h - left.h);
    }
    f.momentum = 0.5 * (fl.momentum + fr.momentum) - 0.5 * alpha * (right.q - left.q);
    return f;
}

StressRegime stress_regime_of_cell(const ModalField& field, int j, const Mesh& mesh,
                                   double h_semi, double h_eps) {
    const int n = field.n_cells();
    const double dx = mesh.widths[j];
    const double u_c = velocity(field.h_avg(j), field.q_avg(j), h_eps);
    const bool wet_l = j > 0 && field.h_avg(j - 1) >= h_semi;
    const bool wet_r = j < n - 1 && field.h_avg(j + 1) >= h_semi;

    double slope = 0.0;
    if (wet_l && wet_r) {
        const double u_l = velocity(field.h_avg(j - 1), field.q_avg(j - 1), h_eps);
        const double u_r = velocity(field.h_avg(j + 1), field.q_avg(j + 1), h_eps);
        slope = (u_r - u_l) / (2.0 * dx);
    } else if (wet_r) {
        const double u_r = velocity(field.h_avg(j + 1), field.q_avg(j + 1), h_eps);
        slope = (u_r - u_c) / dx;
    } else if (wet_l) {
        const double u_l = velocity(field.h_avg(j - 1), field.q_avg(j - 1), h_eps);
        slope = (u_c - u_l) / dx;
    }
    return slope >= 0.0 ? StressRegime::Active : StressRegime::Passive;
}

RhsContext make_rhs_context(const Mesh& mesh, const PhysicalParams& phys,
                            const StoppingParams& stop) {
    RhsContext ctx;
    ctx.mesh = mesh;
    ctx.phys = phys;
    ctx.stop = stop;
    ctx.k_active = earth_pressure_coefficient(StressRegime::Active, phys);
    ctx.k_passive = earth_pressure_coefficient(StressRegime::Passive, phys);

    const int n = mesh.n_cells();
    ctx.sin_zeta_quad.resize(3 * n);
    ctx.cos_zeta_quad.resize(3 * n);
    ctx.kappa_quad.resize(3 * n);
    ctx.quad_x.resize(3 * n);
    for (int j = 0; j < n; ++j) {
        for (int g = 0; g < 3; ++g) {
            const double x = mesh.centers[j] + 0.5 * mesh.widths[j] * basis::kGaussXi[g];
            const double z = zeta(x, phys);
            ctx.quad_x[3 * j + g] = x;
            ctx.sin_zeta_quad[3 * j + g] = std::sin(z);
            ctx.cos_zeta_quad[3 * j + g] = std::cos(z);
            ctx.kappa_quad[3 * j + g] = kappa(x, phys);
        }
    }
    ctx.cos_zeta_iface.resize(n + 1);
    ctx.cos_zeta_iface[0] = std::cos(zeta(mesh.left_edge(0), phys));
    for (int j = 0; j < n; ++j) {
        ctx.cos_zeta_iface[j + 1] = std::cos(zeta(mesh.right_edge(j), phys));
    }
    return ctx;
}

void rhs(const ModalField& field, const std::vector<CellFlags>& flags,
         const RhsContext& ctx, ModalField& rates) {
    const int n = field.n_cells();
    const double h_eps = ctx.stop.h_eps;
    const double tan_delta = std::tan(ctx.phys.delta);

    std::vector<double> k_cell(n);
    for (int j = 0; j < n; ++j) {
        const StressRegime regime =
            stress_regime_of_cell(field, j, ctx.mesh, ctx.stop.h_semi, h_eps);
        k_cell[j] = regime == StressRegime::Active ? ctx.k_active : ctx.k_passive;
    }

    // One flux per interface; boundary interfaces pair the boundary cell
    // with a ghost copy of itself.
    std::vector<FluxPair> fhat(n + 1);
    for (int i = 0; i <= n; ++i) {
        const int jl = std::max(i - 1, 0);
        const int jr = std::min(i, n - 1);
        const ConservedState ul = field.edge_right(jl);
        const ConservedState ur = field.edge_left(jr);
        const double beta_l = ctx.phys.epsilon * ctx.cos_zeta_iface[i] * k_cell[jl];
        const double beta_r = ctx.phys.epsilon * ctx.cos_zeta_iface[i] * k_cell[jr];
        const int eta = std::max(flags[jl].m_stop, flags[jr].m_stop);
        fhat[i] = llf_flux(ul, ur, beta_l, beta_r, eta, h_eps);
    }

    for (int j = 0; j < n; ++j) {
        const double dx = ctx.mesh.widths[j];
        const FluxPair& f_left = fhat[j];
        const FluxPair& f_right = fhat[j + 1];

        // Mass-flux moments integrate exactly: int q phi'_1 = 2 q0,
        // int q phi'_2 = 2 q1.
        const double flux_diff_mass = f_right.mass - f_left.mass;
        rates.h(j, 0) = -flux_diff_mass / dx;
        rates.h(j, 1) = 3.0 * (2.0 * field.q(j, 0) - (f_right.mass + f_left.mass)) / dx;
        rates.h(j, 2) = 5.0 * (2.0 * field.q(j, 1) - flux_diff_mass) / dx;

        if (flags[j].m_stop == 0) {
            // Resting cell: static friction withholds the momentum update.
            rates.q(j, 0) = 0.0;
            rates.q(j, 1) = 0.0;
            rates.q(j, 2) = 0.0;
            continue;
        }

        double h1_mom = 0.0, h2_mom = 0.0;
        double src0 = 0.0, src1 = 0.0, src2 = 0.0;
        for (int g = 0; g < 3; ++g) {
            const double xi = basis::kGaussXi[g];
            const double w = basis::kGaussWeight[g];
            const ConservedState u = field.at(j, xi);
            const double beta_g =
                ctx.phys.epsilon * ctx.cos_zeta_quad[3 * j + g] * k_cell[j];
            const double f2 = flux(u, beta_g, h_eps).momentum;
            h1_mom += w * f2 * (2.0 / dx);
            h2_mom += w * f2 * (6.0 * xi / dx);

            if (u.h > h_eps) {
                const double vel = u.q / u.h;
                double s = ctx.sin_zeta_quad[3 * j + g];
                if (vel != 0.0) {
                    const double normal =
                        std::max(0.0, ctx.cos_zeta_quad[3 * j + g] +
                                          ctx.phys.chi * ctx.kappa_quad[3 * j + g] *
                                              vel * vel);
                    s -= (vel > 0.0 ? 1.0 : -1.0) * tan_delta * normal;
                }
                const double s2 = w * u.h * s;
                src0 += s2;
                src1 += s2 * xi;
                src2 += s2 * 0.5 * (3.0 * xi * xi - 1.0);
            }
        }
        h1_mom *= dx;
        h2_mom *= dx;
        src0 *= dx;
        src1 *= dx;
        src2 *= dx;

        const double flux_diff_mom = f_right.momentum - f_left.momentum;
        rates.q(j, 0) = (-flux_diff_mom + src0) / dx;
        rates.q(j, 1) =
            3.0 * (h1_mom - (f_right.momentum + f_left.momentum) + src1) / dx;
        rates.q(j, 2) = 5.0 * (h2_mom - flux_diff_mom + src2) / dx;
    }
}

}  // namespace sh1d
