#pragma once

#include "sh1d/modal_field.hpp"

namespace sh1d {

struct LimiterParams {
    double gamma = 0.5;  // jump scaling in the minmod arguments, in [1/2, 1]
};

/// minmod: the common-sign minimum magnitude of the three arguments, zero
/// when the signs disagree. Returns one of the inputs exactly.
double minmod(double a1, double a2, double a3);

/// TVD generalized slope limiter for one cell, applied component-wise to
/// h and q. The mode-1 coefficient is replaced by
/// minmod(U1_j, gamma*(U0_j - U0_{j-1}), gamma*(U0_{j+1} - U0_j)); when that
/// changes the linear part the mode-2 coefficient is dropped, otherwise the
/// cell is left untouched. Neighbor averages are passed explicitly so the
/// caller controls the ghost convention.
void limit_cell(ModalField& field, int j, double h_avg_left, double h_avg_right,
                double q_avg_left, double q_avg_right, const LimiterParams& params);

/// Limits every cell against a snapshot of the cell averages taken before
/// any write. Boundary cells see mirror-copy ghost averages.
void limit_field(ModalField& field, const LimiterParams& params);

}  // namespace sh1d
