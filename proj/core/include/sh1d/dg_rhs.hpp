#pragma once

#include <vector>

#include "sh1d/mesh.hpp"
#include "sh1d/modal_field.hpp"
#include "sh1d/physics.hpp"
#include "sh1d/stopping.hpp"

// Spatial DG operator: local Lax-Friedrichs interface fluxes with the
// resting-cell gate on the mass dissipation, three-point Gauss volume
// quadrature, and exact integration of the mass-flux moments.

namespace sh1d {

/// Local Lax-Friedrichs flux. The dissipation scale alpha is the largest
/// characteristic speed of the two states; eta in {0, 1} gates the mass
/// component of the dissipation so interfaces between resting cells do not
/// erode a standing pile.
FluxPair llf_flux(const ConservedState& left, const ConservedState& right,
                  double beta_left, double beta_right, int eta,
                  double h_eps = kDryEps);

/// Stress regime from the sign of the discrete velocity slope at the cell
/// center: central differences of neighbor cell-average velocities where
/// both neighbors are wet (h_avg >= h_semi), one-sided toward a single wet
/// neighbor, Active when isolated. Active iff the slope is >= 0.
StressRegime stress_regime_of_cell(const ModalField& field, int j, const Mesh& mesh,
                                   double h_semi, double h_eps = kDryEps);

// Per-run context for the RHS: parameters plus tables of the slope
// geometry at quadrature points and interfaces, so the hot loop does no
// trigonometry.
struct RhsContext {
    Mesh mesh;
    PhysicalParams phys;
    StoppingParams stop;
    double k_active = 0.0;
    double k_passive = 0.0;
    std::vector<double> sin_zeta_quad;  // 3 per cell
    std::vector<double> cos_zeta_quad;
    std::vector<double> kappa_quad;
    std::vector<double> cos_zeta_iface;  // n_cells + 1
    std::vector<double> quad_x;          // 3 per cell
};

RhsContext make_rhs_context(const Mesh& mesh, const PhysicalParams& phys,
                            const StoppingParams& stop);

/// Semi-discrete rates for every mode of every cell. Boundary interfaces
/// see a ghost copy of the adjacent interior cell. Momentum rates of
/// resting cells (m_stop = 0) are withheld: static friction absorbs
/// sub-threshold driving until the repose test releases the cell.
void rhs(const ModalField& field, const std::vector<CellFlags>& flags,
         const RhsContext& ctx, ModalField& rates);

}  // namespace sh1d
