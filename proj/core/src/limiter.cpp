#include "sh1d/limiter.hpp"

#include <cmath>
#include <vector>

namespace sh1d {

double minmod(double a1, double a2, double a3) {
    if (a1 > 0.0 && a2 > 0.0 && a3 > 0.0) {
        return std::min(a1, std::min(a2, a3));
    }
    if (a1 < 0.0 && a2 < 0.0 && a3 < 0.0) {
        return std::max(a1, std::max(a2, a3));
    }
    return 0.0;
}

namespace {

// Per-variable worker; limited == unlimited leaves the cell untouched so an
// already-limited polynomial (including its mode 2) survives bit-exactly.
void limit_component(double& c1, double& c2, double avg, double avg_left,
                     double avg_right, double gamma) {
    const double m = minmod(c1, gamma * (avg - avg_left), gamma * (avg_right - avg));
    if (m != c1) {
        c1 = m;
        c2 = 0.0;
    }
}

}  // namespace

void limit_cell(ModalField& field, int j, double h_avg_left, double h_avg_right,
                double q_avg_left, double q_avg_right, const LimiterParams& params) {
    limit_component(field.h(j, 1), field.h(j, 2), field.h(j, 0), h_avg_left,
                    h_avg_right, params.gamma);
    limit_component(field.q(j, 1), field.q(j, 2), field.q(j, 0), q_avg_left,
                    q_avg_right, params.gamma);
}

void limit_field(ModalField& field, const LimiterParams& params) {
    const int n = field.n_cells();
    std::vector<double> h_avg(n), q_avg(n);
    for (int j = 0; j < n; ++j) {
        h_avg[j] = field.h_avg(j);
        q_avg[j] = field.q_avg(j);
    }
    for (int j = 0; j < n; ++j) {
        const int jl = j > 0 ? j - 1 : j;
        const int jr = j < n - 1 ? j + 1 : j;
        limit_cell(field, j, h_avg[jl], h_avg[jr], q_avg[jl], q_avg[jr], params);
    }
}

}  // namespace sh1d
