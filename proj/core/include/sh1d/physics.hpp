#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

// Continuous Savage-Hutter model for a shallow granular layer on a chute
// that is inclined for x < x_incl_end, circularly transitioned on
// [x_incl_end, x_trans_end], and horizontal beyond. All quantities are
// dimensionless; angles are radians.

namespace sh1d {

/// Depth threshold below which a state is treated as vacuum when
/// recovering velocities or evaluating fluxes.
inline constexpr double kDryEps = 1e-10;

struct PhysicalParams {
    double zeta0 = 35.0 * M_PI / 180.0;  // inclination angle of the upper chute
    double phi = 30.0 * M_PI / 180.0;    // internal friction angle
    double delta = 30.0 * M_PI / 180.0;  // bed friction angle
    double epsilon = 1.85 / 30.0;        // aspect ratio H/L
    double chi = 1.0;                    // curvature stretch factor
    double x_incl_end = 17.5;            // end of the inclined section
    double x_trans_end = 21.5;           // end of the transition arc
    double yb0 = 10.0;                   // bed-sketch elevation amplitude

    double transition_length() const { return x_trans_end - x_incl_end; }
};

struct ConservedState {
    double h = 0.0;  // flow depth
    double q = 0.0;  // discharge h*u
};

struct FluxPair {
    double mass = 0.0;
    double momentum = 0.0;
};

// Longitudinal stress state: Active while the flow extends (du/dx >= 0),
// Passive while it contracts.
enum class StressRegime { Active, Passive };

/// Depth-averaged velocity with the dry-state guard: u = q/h for h > h_eps,
/// zero otherwise.
inline double velocity(double h, double q, double h_eps = kDryEps) {
    return h > h_eps ? q / h : 0.0;
}

/// Local inclination angle of the reference surface.
inline double zeta(double x, const PhysicalParams& p) {
    if (x <= p.x_incl_end) return p.zeta0;
    if (x >= p.x_trans_end) return 0.0;
    return p.zeta0 * (1.0 - (x - p.x_incl_end) / p.transition_length());
}

/// Local curvature kappa = -d(zeta)/dx; nonzero only on the transition arc.
inline double kappa(double x, const PhysicalParams& p) {
    if (x > p.x_incl_end && x < p.x_trans_end) {
        return p.zeta0 / p.transition_length();
    }
    return 0.0;
}

/// Mohr-Coulomb earth pressure coefficient. Throws if delta > phi, for
/// which the radicand 1 - cos^2(phi)*sec^2(delta) turns negative.
inline double earth_pressure_coefficient(StressRegime regime, const PhysicalParams& p) {
    const double cos_ratio = std::cos(p.phi) / std::cos(p.delta);
    const double radicand = 1.0 - cos_ratio * cos_ratio;
    if (radicand < 0.0) {
        throw std::invalid_argument(
            "earth_pressure_coefficient: bed friction angle delta exceeds "
            "internal friction angle phi");
    }
    const double root = std::sqrt(radicand);
    const double sec2_phi = 1.0 / (std::cos(p.phi) * std::cos(p.phi));
    const double sign = (regime == StressRegime::Active) ? -1.0 : 1.0;
    return 2.0 * sec2_phi * (1.0 + sign * root) - 1.0;
}

/// Pressure factor beta = epsilon * cos(zeta(x)) * K.
inline double beta(double x, StressRegime regime, const PhysicalParams& p) {
    return p.epsilon * std::cos(zeta(x, p)) * earth_pressure_coefficient(regime, p);
}

/// Convective flux F(U) = (q, q^2/h + beta*h^2/2); vacuum (h <= h_eps)
/// states yield a zero flux.
inline FluxPair flux(const ConservedState& u, double beta_val, double h_eps = kDryEps) {
    if (u.h <= h_eps) return {0.0, 0.0};
    const double vel = u.q / u.h;
    return {u.q, u.q * vel + 0.5 * beta_val * u.h * u.h};
}

struct EigenPair {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

/// Characteristic speeds u -+ sqrt(beta*h).
inline EigenPair eigenvalues(const ConservedState& u, double beta_val, double h_eps = kDryEps) {
    const double vel = velocity(u.h, u.q, h_eps);
    const double c = std::sqrt(std::max(0.0, beta_val * u.h));
    return {vel - c, vel + c};
}

/// max(|lambda1|, |lambda2|) for the local Lax-Friedrichs dissipation scale.
inline double max_wave_speed(const ConservedState& u, double beta_val, double h_eps = kDryEps) {
    const auto ev = eigenvalues(u, beta_val, h_eps);
    return std::max(std::abs(ev.lambda1), std::abs(ev.lambda2));
}

/// Net driving acceleration s(u) = sin(zeta) - sign(u) tan(delta)
/// max(0, cos(zeta) + chi*kappa*u^2). sign(0) == 0: a cell at rest feels
/// no kinetic friction here; static friction lives in the reposing logic.
inline double driving_acceleration(double u_vel, double sin_z, double cos_z,
                                   double kap, const PhysicalParams& p) {
    double s = sin_z;
    if (u_vel != 0.0) {
        const double sign = u_vel > 0.0 ? 1.0 : -1.0;
        const double normal = std::max(0.0, cos_z + p.chi * kap * u_vel * u_vel);
        s -= sign * std::tan(p.delta) * normal;
    }
    return s;
}

/// Source vector S(U) = (0, h*s(u)).
inline FluxPair source(const ConservedState& u, double x, const PhysicalParams& p,
                       double h_eps = kDryEps) {
    if (u.h <= h_eps) return {0.0, 0.0};
    const double z = zeta(x, p);
    const double s = driving_acceleration(u.q / u.h, std::sin(z), std::cos(z),
                                          kappa(x, p), p);
    return {0.0, u.h * s};
}

}  // namespace sh1d
