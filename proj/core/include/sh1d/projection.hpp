#pragma once

#include <functional>

#include "sh1d/mesh.hpp"
#include "sh1d/modal_field.hpp"

namespace sh1d {

using DepthProfile = std::function<double(double)>;

/// L2 projection of an initial depth profile onto the modal basis,
/// U_l^j = (2l+1)/dx * int_cell h0(x) phi_l(x) dx, evaluated with the
/// module's three-point Gauss rule. Discharge modes are zero: the material
/// is released from rest.
ModalField project_initial(const DepthProfile& h0, const Mesh& mesh);

/// Semi-circular cap of radius r0 centered at x0:
/// h0(x) = sqrt(max(0, r0^2 - (x - x0)^2)).
DepthProfile semicircle_profile(double r0, double x0);

/// Parabolic cap: h0(x) = amplitude * max(0, 1 - ((x - x0)/half_width)^2).
DepthProfile parabola_profile(double amplitude, double half_width, double x0);

/// Gaussian bump on a constant base: h0(x) = base + amplitude * exp(-(x - x0)^2 / (2 sigma^2)).
DepthProfile gaussian_profile(double base, double amplitude, double sigma, double x0);

}  // namespace sh1d
