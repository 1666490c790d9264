#pragma once

#include "sh1d/physics.hpp"

// Transformation from the chute-following computational coordinate x (with
// depth h normal to the reference surface) to horizontal-vertical
// coordinates for plotting. The reference surface is a straight incline,
// a circular arc of radius r = transition_length/zeta0, and a horizontal
// run-out whose level defines y = 0.

namespace sh1d {

struct PhysicalPoint {
    double x_b = 0.0;   // horizontal position of the reference surface
    double y_b = 0.0;   // vertical position of the reference surface
    double h_xb = 0.0;  // horizontal component of the depth vector
    double h_yb = 0.0;  // vertical component of the depth vector
};

/// Maps (x, h) to physical coordinates; the depth vector (h_xb, h_yb) is
/// normal to the local reference surface with magnitude h, so the free
/// surface sits at (x_b + h_xb, y_b + h_yb). A zero inclination angle
/// degenerates to the identity map with a vertical depth vector.
PhysicalPoint to_physical(double x, double h, const PhysicalParams& p);

/// Bed elevation sketch y_b0 * (1 - cos(pi/4)) * sin(zeta(x)); plot
/// annotation only, never part of the dynamics.
double bed_sketch(double x, const PhysicalParams& p);

}  // namespace sh1d
