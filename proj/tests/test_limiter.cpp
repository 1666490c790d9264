#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sh1d/limiter.hpp"
#include "sh1d/modal_field.hpp"

using namespace sh1d;

TEST_CASE("minmod") {
    CHECK(minmod(1.0, 2.0, 3.0) == 1.0);
    CHECK(minmod(1.0, -2.0, 3.0) == 0.0);
    CHECK(minmod(-0.5, -2.0, -1.0) == -0.5);
    CHECK(minmod(0.0, 1.0, 2.0) == 0.0);
    CHECK(minmod(3.0, 0.5, 1.0) == 0.5);

    // Returns one of its arguments (or zero) exactly.
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = dist(rng), b = dist(rng), c = dist(rng);
        const double m = minmod(a, b, c);
        CHECK((m == a || m == b || m == c || m == 0.0));
        CHECK(std::abs(m) <= std::abs(a));
        CHECK(std::abs(m) <= std::abs(b));
        CHECK(std::abs(m) <= std::abs(c));
    }
}

namespace {

// Direct transcription of the limited-interface-value definition: the
// correction to both interface traces of the linear part is
// mm(U1, gamma*dminus, gamma*dplus), and the cell is untouched exactly when
// that equals U1.
struct ScalarLimitOracle {
    double slope;
    bool fired;
};

ScalarLimitOracle scalar_limit(double avg, double slope, double avg_left,
                               double avg_right, double gamma) {
    const double dminus = avg - avg_left;
    const double dplus = avg_right - avg;
    const double iface_right = avg + slope;           // linear part at x_{j+1/2}^-
    const double iface_left = avg - slope;            // linear part at x_{j-1/2}^+
    const double limited_right =
        avg + minmod(iface_right - avg, gamma * dminus, gamma * dplus);
    const double limited_left =
        avg - minmod(avg - iface_left, gamma * dminus, gamma * dplus);
    const bool untouched = limited_right == iface_right && limited_left == iface_left;
    return {limited_right - avg, !untouched};
}

ModalField three_cells(double l, double c, double r, double slope, double mode2) {
    ModalField f(3);
    f.h(0, 0) = l;
    f.h(1, 0) = c;
    f.h(2, 0) = r;
    f.h(1, 1) = slope;
    f.h(1, 2) = mode2;
    return f;
}

}  // namespace

TEST_CASE("limit_cell") {
    LimiterParams params;

    SUBCASE("consistent linear data is untouched") {
        // Averages step by 1 per cell, slope dx/2 in the phi_1 basis is 0.5
        // of the average jump; gamma = 0.5 makes the minmod arguments equal.
        ModalField f = three_cells(1.0, 2.0, 3.0, 0.5, 0.125);
        limit_cell(f, 1, 1.0, 3.0, 0.0, 0.0, params);
        CHECK(f.h(1, 1) == 0.5);
        CHECK(f.h(1, 2) == 0.125);  // high modes preserved bit-exactly
    }
    SUBCASE("isolated extremum is flattened") {
        ModalField f = three_cells(0.0, 1.0, 0.0, 0.3, 0.2);
        limit_cell(f, 1, 0.0, 0.0, 0.0, 0.0, params);
        CHECK(f.h(1, 0) == 1.0);
        CHECK(f.h(1, 1) == 0.0);
        CHECK(f.h(1, 2) == 0.0);
    }
    SUBCASE("steep slope is clipped to the gamma bound") {
        ModalField f = three_cells(1.0, 2.0, 3.0, 2.0, 0.1);
        limit_cell(f, 1, 1.0, 3.0, 0.0, 0.0, params);
        CHECK(f.h(1, 1) == doctest::Approx(0.5));  // gamma * min(dminus, dplus)
        CHECK(f.h(1, 2) == 0.0);
    }
    SUBCASE("matches the scalar transcription on random cells") {
        // The transcription works on interface values, so its slope can
        // differ from the phi_1-basis result by rounding; the fire decision
        // must agree exactly, the slope to round-off.
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> avg_dist(0.0, 4.0);
        std::uniform_real_distribution<double> mode_dist(-1.0, 1.0);
        for (int i = 0; i < 2000; ++i) {
            const double l = avg_dist(rng), c = avg_dist(rng), r = avg_dist(rng);
            const double slope = mode_dist(rng);
            double curv = mode_dist(rng);
            curv += curv >= 0.0 ? 0.05 : -0.05;  // keep mode 2 visibly nonzero
            ModalField f = three_cells(l, c, r, slope, curv);
            limit_cell(f, 1, l, r, 0.0, 0.0, params);
            const ScalarLimitOracle oracle = scalar_limit(c, slope, l, r, params.gamma);
            const bool fired = !(f.h(1, 1) == slope && f.h(1, 2) == curv);
            CHECK(f.h(1, 0) == c);
            CHECK(fired == oracle.fired);
            CHECK(f.h(1, 1) == doctest::Approx(oracle.slope).epsilon(1e-12));
            CHECK(f.h(1, 2) == (oracle.fired ? 0.0 : curv));
        }
    }
}

TEST_CASE("limit_field properties") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> avg_dist(0.0, 3.0);
    std::uniform_real_distribution<double> mode_dist(-0.8, 0.8);
    LimiterParams params;

    for (int trial = 0; trial < 200; ++trial) {
        const int n = 12;
        ModalField f(n);
        for (int j = 0; j < n; ++j) {
            f.h(j, 0) = avg_dist(rng);
            f.h(j, 1) = mode_dist(rng);
            f.h(j, 2) = mode_dist(rng);
            f.q(j, 0) = mode_dist(rng) * 2.0;
            f.q(j, 1) = mode_dist(rng);
            f.q(j, 2) = mode_dist(rng);
        }
        ModalField before = f;
        limit_field(f, params);

        for (int j = 0; j < n; ++j) {
            // Mode 0 is never touched.
            CHECK(f.h(j, 0) == before.h(j, 0));
            CHECK(f.q(j, 0) == before.q(j, 0));

            // When the limiter fired, the interface offset obeys the
            // gamma-scaled jump bound.
            if (f.h(j, 1) != before.h(j, 1)) {
                const int jl = j > 0 ? j - 1 : j;
                const int jr = j < n - 1 ? j + 1 : j;
                const double dminus = before.h(j, 0) - before.h(jl, 0);
                const double dplus = before.h(jr, 0) - before.h(j, 0);
                CHECK(std::abs(f.h(j, 1)) <=
                      params.gamma * std::max(std::abs(dminus), std::abs(dplus)) + 1e-15);
                CHECK(f.h(j, 2) == 0.0);
            }
        }

        // Idempotence, bit for bit.
        ModalField once = f;
        limit_field(f, params);
        CHECK(f.h_data() == once.h_data());
        CHECK(f.q_data() == once.q_data());
    }
}
