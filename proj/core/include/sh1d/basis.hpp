#pragma once

#include <array>
#include <stdexcept>

// Scaled Legendre basis on a cell [x_j - dx/2, x_j + dx/2], expressed in the
// local coordinate xi = 2(x - x_j)/dx in [-1, 1]:
//   phi_0 = 1,  phi_1 = xi,  phi_2 = (3 xi^2 - 1)/2,
// orthogonal with integral dx/(2l+1) of phi_l^2 over the cell.

namespace sh1d::basis {

inline constexpr int kDegree = 2;
inline constexpr int kModes = kDegree + 1;

// Three-point Gauss rule on [-1, 1] with weights normalized to sum to 1,
// so that the cell integral is dx * sum_g w_g f(x_g). Exact through
// polynomial degree 5.
inline constexpr std::array<double, 3> kGaussXi = {
    -0.7745966692414833770358531, 0.0, 0.7745966692414833770358531};
inline constexpr std::array<double, 3> kGaussWeight = {5.0 / 18.0, 8.0 / 18.0,
                                                       5.0 / 18.0};

inline double value(int mode, double xi) {
    switch (mode) {
        case 0: return 1.0;
        case 1: return xi;
        case 2: return 0.5 * (3.0 * xi * xi - 1.0);
        default: throw std::out_of_range("basis::value: mode index out of range");
    }
}

/// d(phi_mode)/dx on a cell of width dx.
inline double deriv(int mode, double xi, double dx) {
    switch (mode) {
        case 0: return 0.0;
        case 1: return 2.0 / dx;
        case 2: return 6.0 * xi / dx;
        default: throw std::out_of_range("basis::deriv: mode index out of range");
    }
}

/// phi_mode evaluated in global coordinates on the cell centered at xc.
inline double value_at(int mode, double x, double xc, double dx) {
    return value(mode, 2.0 * (x - xc) / dx);
}

/// Diagonal of the P2 mass matrix: diag(dx, dx/3, dx/5).
inline std::array<double, kModes> mass_matrix(int degree, double dx) {
    if (degree != kDegree) {
        throw std::invalid_argument("mass_matrix: only degree 2 is supported");
    }
    return {dx, dx / 3.0, dx / 5.0};
}

/// Integral of f over the cell centered at xc with width dx by the
/// three-point Gauss rule.
template <typename F>
double gauss3(F&& f, double xc, double dx) {
    double acc = 0.0;
    for (int g = 0; g < 3; ++g) {
        acc += kGaussWeight[g] * f(xc + 0.5 * dx * kGaussXi[g]);
    }
    return dx * acc;
}

}  // namespace sh1d::basis
