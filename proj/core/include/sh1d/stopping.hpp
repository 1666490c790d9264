#pragma once

#include <vector>

#include "sh1d/mesh.hpp"
#include "sh1d/modal_field.hpp"
#include "sh1d/physics.hpp"

// Wet/dry bookkeeping and the Coulomb reposing-state treatment. A cell
// tagged m_stop = 0 is at rest: its momentum modes are zeroed, the mass
// dissipation of the interface flux is switched off at its interfaces, and
// the momentum update is withheld until the force balance breaks.

namespace sh1d {

enum class Wetness { Dry, SemiWet, Wet };

struct CellFlags {
    Wetness wetness = Wetness::Dry;
    int m_stop = 1;  // 0 resting, 1 flowing
};

struct StoppingParams {
    double h_semi = 1e-6;    // wet threshold on the cell-average depth
    double h_eps = kDryEps;  // dry threshold
    // Speed gate for entering the reposing state. The default admits only
    // exact numerical rest: transient near-zero crossings during a pile-up
    // stay mobile, otherwise the deposit locks before it finishes
    // spreading.
    double u_stop = 0.0;
};

/// Assigns wetness from the cell-average depth and zeroes all momentum
/// modes of dry cells.
void classify(ModalField& field, std::vector<CellFlags>& flags,
              const StoppingParams& params);

/// Replaces the velocity of each semi-wet cell by the neighbor-extrapolated
/// value (zero when both neighbors are below h_semi, else the deeper
/// neighbor's velocity), rewrites the average momentum accordingly and
/// drops the momentum modes 1 and 2. Depth modes are untouched.
void fix_semiwet(ModalField& field, const std::vector<CellFlags>& flags,
                 const StoppingParams& params);

struct ReposeForces {
    double driving = 0.0;  // sin(zeta) minus the discrete pressure gradient term
    double ceiling = 0.0;  // Coulomb friction bound tan(delta)*max(0, cos(zeta)+chi*kappa*u^2)
};

/// The force pair the repose test compares for cell j, exposed for tests
/// and diagnostics. Central depth differences with one-sided fallback
/// where a neighbor holds no material.
ReposeForces repose_forces(const ModalField& field, int j,
                           const PhysicalParams& phys, const StoppingParams& params,
                           const Mesh& mesh);

/// Tags every material cell resting (m_stop = 0) when its average speed is
/// within u_stop and the driving force is within the Coulomb ceiling;
/// momentum modes of resting cells are zeroed. Dry cells rest by
/// definition.
void repose_test(ModalField& field, std::vector<CellFlags>& flags,
                 const PhysicalParams& phys, const StoppingParams& params,
                 const Mesh& mesh);

struct ClampReport {
    double mass_added = 0.0;  // total depth integral restored to zero
    int cells_clamped = 0;
    double worst_depth = 0.0;  // most negative average encountered
};

/// Resets cells with a negative average depth to vacuum and reports the
/// mass this adds.
ClampReport clamp_negative_depth(ModalField& field, const Mesh& mesh);

}  // namespace sh1d
