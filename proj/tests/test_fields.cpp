#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "frext/fields.hpp"
#include "frext/numerics.hpp"
#include "oracles.hpp"

using namespace frext;

namespace {

ConvexArc circle_arc(double extent = kPi / 2.0, int n = 1025) {
    CurveSpec s;
    s.kind = CurveSpec::Kind::Circle;
    s.radius = 1.0;
    s.extent = extent;
    return build_from_curvature(s, n);
}

ConvexArc parabola_arc(double mu, double hw, int n = 2049) {
    CurveSpec s;
    s.kind = CurveSpec::Kind::Parabola;
    s.mu = mu;
    s.halfwidth = hw;
    return build_from_graph(s, n);
}

}  // namespace

TEST_CASE("l2 norm basics") {
    const ConvexArc arc = circle_arc();
    SUBCASE("constant one has norm sqrt(length)") {
        const auto f = sample_arc_function(arc, MeasureKind::Arclength,
                                           [](double) { return cplx{1.0, 0.0}; });
        CHECK(l2_sigma_norm(f) == doctest::Approx(std::sqrt(arc.length)).epsilon(1e-12));
    }
    SUBCASE("zero function") {
        const auto f = sample_arc_function(arc, MeasureKind::Arclength,
                                           [](double) { return cplx{0.0, 0.0}; });
        CHECK(l2_sigma_norm(f) == 0.0);
    }
    SUBCASE("Gaussian with projection measure: pi^{1/4}") {
        const ConvexArc p = parabola_arc(1.0, 6.0, 4097);
        const auto f = sample_arc_function(p, MeasureKind::Projection, [](double y) {
            return cplx{std::exp(-0.5 * y * y), 0.0};
        });
        CHECK(std::abs(l2_sigma_norm(f) - std::pow(kPi, 0.25)) < 1e-8);
    }
}

TEST_CASE("projection measure requires a graph arc") {
    const ConvexArc arc = circle_arc();
    ArcFunction f;
    f.arc = &arc;
    f.measure = MeasureKind::Projection;
    f.values.assign(arc.size(), cplx{1.0, 0.0});
    CHECK_THROWS(f.validate());
}

TEST_CASE("restriction to caps") {
    const ConvexArc arc = circle_arc();
    const auto one = sample_arc_function(arc, MeasureKind::Arclength,
                                         [](double) { return cplx{1.0, 0.0}; });
    SUBCASE("cap covering the whole arc leaves f unchanged") {
        const auto r = restrict_to_cap(one, Cap{arc.length / 2, 2.0 * arc.length});
        for (std::size_t i = 0; i < r.size(); ++i) CHECK(r.values[i] == one.values[i]);
    }
    SUBCASE("disjoint cap zeroes f") {
        const auto r = restrict_to_cap(one, Cap{10.0 * arc.length, 0.1});
        for (std::size_t i = 0; i < r.size(); ++i) CHECK(r.values[i] == cplx{0.0, 0.0});
    }
    SUBCASE("interior cap mass") {
        const double r = arc.length / 4.0;
        const auto g = restrict_to_cap(one, Cap{arc.length / 2, r});
        const double n2 = std::pow(l2_sigma_norm(g), 2);
        CHECK(std::abs(n2 - 2.0 * r) < 2.0 * arc.grid_step());
    }
    SUBCASE("nonpositive radius rejects") {
        CHECK_THROWS(restrict_to_cap(one, Cap{0.5, 0.0}));
    }
    SUBCASE("restriction is idempotent") {
        const Cap c{arc.length / 3, arc.length / 5};
        const auto r1 = restrict_to_cap(one, c);
        const auto r2 = restrict_to_cap(r1, c);
        for (std::size_t i = 0; i < r1.size(); ++i) CHECK(r1.values[i] == r2.values[i]);
    }
}

TEST_CASE("Parseval consistency of disjoint restrictions") {
    const ConvexArc arc = circle_arc();
    const auto f = sample_arc_function(arc, MeasureKind::Arclength, [&](double s) {
        return cplx{std::cos(3.0 * s) + 1.2, 0.4 * std::sin(s)};
    });
    const Cap c{arc.length / 2, arc.length / 6};
    const auto g = restrict_to_cap(f, c);
    ArcFunction rest = f;
    for (std::size_t i = 0; i < f.size(); ++i) rest.values[i] -= g.values[i];
    const double total = std::pow(l2_sigma_norm(f), 2);
    const double parts = std::pow(l2_sigma_norm(g), 2) + std::pow(l2_sigma_norm(rest), 2);
    CHECK(total == doctest::Approx(parts).epsilon(1e-13));
}

TEST_CASE("Simpson quadrature order: doubling n cuts the error by >= 8x") {
    // closed form: int_0^L cos^2(3s) ds = L/2 + sin(6L)/12
    const double extent = 1.4;
    const double exact = extent / 2.0 + std::sin(6.0 * extent) / 12.0;
    auto err_at = [&](int n) {
        const ConvexArc arc = circle_arc(extent, n);
        const auto f = sample_arc_function(arc, MeasureKind::Arclength, [](double s) {
            return cplx{std::cos(3.0 * s), 0.0};
        });
        return std::abs(std::pow(l2_sigma_norm(f), 2) - exact);
    };
    const double e1 = err_at(129), e2 = err_at(257);
    CHECK(e1 / e2 >= 8.0);
}

TEST_CASE("cap measure snaps to the grid") {
    const ConvexArc arc = circle_arc();
    const Cap c{arc.length / 2, arc.length / 4};
    const double m = cap_measure(arc, c, MeasureKind::Arclength);
    CHECK(std::abs(m - arc.length / 2) < 2.0 * arc.grid_step());
    const double mc = cap_measure(arc, Cap{0.0, arc.length / 4}, MeasureKind::Arclength);
    CHECK(std::abs(mc - arc.length / 4) < 2.0 * arc.grid_step());
}

TEST_CASE("plane grid validation") {
    PlaneGrid g;
    g.x_min = -1;
    g.x_max = 1;
    g.t_min = -1;
    g.t_max = 1;
    g.nx = 11;
    g.nt = 11;
    g.validate();
    PlaneGrid bad = g;
    bad.nx = 1;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("nonneg flag is enforced") {
    const ConvexArc arc = circle_arc();
    ArcFunction f;
    f.arc = &arc;
    f.measure = MeasureKind::Arclength;
    f.values.assign(arc.size(), cplx{-1.0, 0.0});
    f.nonneg = true;
    CHECK_THROWS(f.validate());
}
