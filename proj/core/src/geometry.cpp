#include "sh1d/geometry.hpp"

#include <cmath>

namespace sh1d {

PhysicalPoint to_physical(double x, double h, const PhysicalParams& p) {
    if (p.zeta0 <= 0.0) {
        return {x, 0.0, 0.0, h};
    }
    const double r = p.transition_length() / p.zeta0;
    const double x1 = p.x_incl_end * std::cos(p.zeta0);
    const double y1 = r * (1.0 - std::cos(p.zeta0));
    const double x2 = x1 + r * std::sin(p.zeta0);

    if (x >= p.x_trans_end) {
        return {x2 + (x - p.x_trans_end), 0.0, 0.0, h};
    }
    if (x >= p.x_incl_end) {
        const double z = (p.x_trans_end - x) / r;
        return {x2 - r * std::sin(z), r * (1.0 - std::cos(z)), h * std::sin(z),
                h * std::cos(z)};
    }
    return {x * std::cos(p.zeta0), y1 + (p.x_incl_end - x) * std::sin(p.zeta0),
            h * std::sin(p.zeta0), h * std::cos(p.zeta0)};
}

double bed_sketch(double x, const PhysicalParams& p) {
    return p.yb0 * (1.0 - std::cos(M_PI / 4.0)) * std::sin(zeta(x, p));
}

}  // namespace sh1d
