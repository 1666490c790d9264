#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sh1d/geometry.hpp"

using namespace sh1d;

namespace {

PhysicalParams with_zeta0(double deg) {
    PhysicalParams p;
    p.zeta0 = deg * M_PI / 180.0;
    return p;
}

}  // namespace

TEST_CASE("chute transform branch values") {
    PhysicalParams p = with_zeta0(35);
    const double r = p.transition_length() / p.zeta0;
    const double x1 = 17.5 * std::cos(p.zeta0);
    const double y1 = r * (1.0 - std::cos(p.zeta0));
    const double x2 = x1 + r * std::sin(p.zeta0);

    SUBCASE("start of the run-out") {
        const PhysicalPoint pt = to_physical(21.5, 1.0, p);
        CHECK(pt.x_b == doctest::Approx(x2).epsilon(1e-14));
        CHECK(pt.y_b == 0.0);
        CHECK(pt.h_xb == 0.0);
        CHECK(pt.h_yb == 1.0);
    }
    SUBCASE("transition meets the incline") {
        const PhysicalPoint pt = to_physical(17.5, 0.5, p);
        CHECK(pt.x_b == doctest::Approx(x1).epsilon(1e-13));
        CHECK(pt.y_b == doctest::Approx(y1).epsilon(1e-13));
        CHECK(pt.h_xb == doctest::Approx(0.5 * std::sin(p.zeta0)).epsilon(1e-13));
    }
    SUBCASE("top of the incline") {
        const PhysicalPoint pt = to_physical(0.0, 0.0, p);
        CHECK(pt.x_b == 0.0);
        CHECK(pt.y_b == doctest::Approx(y1 + 17.5 * std::sin(p.zeta0)).epsilon(1e-13));
        CHECK(pt.h_xb == 0.0);
        CHECK(pt.h_yb == 0.0);
    }
}

TEST_CASE("transform is continuous across both seams") {
    for (double zeta0_deg : {20.0, 35.0, 40.0}) {
        PhysicalParams p = with_zeta0(zeta0_deg);
        for (double seam : {17.5, 21.5}) {
            const PhysicalPoint below = to_physical(seam - 1e-12, 0.7, p);
            const PhysicalPoint above = to_physical(seam + 1e-12, 0.7, p);
            CHECK(below.x_b == doctest::Approx(above.x_b).epsilon(1e-10));
            CHECK(below.y_b == doctest::Approx(above.y_b).epsilon(1e-10));
            CHECK(below.h_xb == doctest::Approx(above.h_xb).epsilon(1e-9));
            CHECK(below.h_yb == doctest::Approx(above.h_yb).epsilon(1e-9));
        }
    }
}

TEST_CASE("transform preserves arc length") {
    PhysicalParams p = with_zeta0(35);
    const double dx = 1e-6;
    for (double x : {2.0, 10.0, 18.0, 19.5, 21.0, 24.0, 28.0}) {
        const PhysicalPoint a = to_physical(x - dx, 0.0, p);
        const PhysicalPoint b = to_physical(x + dx, 0.0, p);
        const double ds = std::hypot(b.x_b - a.x_b, b.y_b - a.y_b) / (2.0 * dx);
        CHECK(ds == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("depth vector is normal to the reference surface") {
    PhysicalParams p = with_zeta0(40);
    const double dx = 1e-6;
    for (double x : {2.0, 18.5, 20.9, 25.0}) {
        const PhysicalPoint a = to_physical(x - dx, 1.0, p);
        const PhysicalPoint b = to_physical(x + dx, 1.0, p);
        const PhysicalPoint c = to_physical(x, 1.0, p);
        const double tx = (b.x_b - a.x_b) / (2.0 * dx);
        const double ty = (b.y_b - a.y_b) / (2.0 * dx);
        CHECK(std::abs(c.h_xb * tx + c.h_yb * ty) <= 1e-6);
        CHECK(std::hypot(c.h_xb, c.h_yb) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("zero inclination degenerates to the identity map") {
    PhysicalParams p = with_zeta0(0);
    const PhysicalPoint pt = to_physical(7.25, 0.6, p);
    CHECK(pt.x_b == 7.25);
    CHECK(pt.y_b == 0.0);
    CHECK(pt.h_xb == 0.0);
    CHECK(pt.h_yb == 0.6);
}

TEST_CASE("bed sketch") {
    PhysicalParams p = with_zeta0(35);
    CHECK(bed_sketch(25.0, p) == 0.0);
    const double expected = 10.0 * (1.0 - std::cos(M_PI / 4.0)) * std::sin(p.zeta0);
    CHECK(bed_sketch(5.0, p) == doctest::Approx(expected).epsilon(1e-13));
    PhysicalParams flat = with_zeta0(0);
    CHECK(bed_sketch(5.0, flat) == 0.0);
    CHECK(bed_sketch(20.0, flat) == 0.0);
}
