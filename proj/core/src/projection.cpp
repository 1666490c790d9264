#include "sh1d/projection.hpp"

#include <cmath>

namespace sh1d {

ModalField project_initial(const DepthProfile& h0, const Mesh& mesh) {
    const int n = mesh.n_cells();
    ModalField field(n);
    for (int j = 0; j < n; ++j) {
        const double xc = mesh.centers[j];
        const double dx = mesh.widths[j];
        for (int m = 0; m < basis::kModes; ++m) {
            const double integral = basis::gauss3(
                [&](double x) { return h0(x) * basis::value_at(m, x, xc, dx); }, xc,
                dx);
            field.h(j, m) = (2.0 * m + 1.0) / dx * integral;
        }
    }
    return field;
}

DepthProfile semicircle_profile(double r0, double x0) {
    return [r0, x0](double x) {
        const double d = x - x0;
        return std::sqrt(std::max(0.0, r0 * r0 - d * d));
    };
}

DepthProfile parabola_profile(double amplitude, double half_width, double x0) {
    return [amplitude, half_width, x0](double x) {
        const double s = (x - x0) / half_width;
        return amplitude * std::max(0.0, 1.0 - s * s);
    };
}

DepthProfile gaussian_profile(double base, double amplitude, double sigma, double x0) {
    return [base, amplitude, sigma, x0](double x) {
        const double d = (x - x0) / sigma;
        return base + amplitude * std::exp(-0.5 * d * d);
    };
}

}  // namespace sh1d
