#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "frext/geometry.hpp"
#include "frext/numerics.hpp"
#include "oracles.hpp"

using namespace frext;

namespace {

CurveSpec circle(double radius, double extent) {
    CurveSpec s;
    s.kind = CurveSpec::Kind::Circle;
    s.radius = radius;
    s.extent = extent;
    return s;
}

CurveSpec parabola(double mu, double hw) {
    CurveSpec s;
    s.kind = CurveSpec::Kind::Parabola;
    s.mu = mu;
    s.halfwidth = hw;
    return s;
}

CurveSpec pparabola(double lambda, double a, double hw) {
    CurveSpec s;
    s.kind = CurveSpec::Kind::PerturbedParabola;
    s.lambda = lambda;
    s.a = a;
    s.halfwidth = hw;
    return s;
}

// curvature second derivative by a 5-point stencil on the arclength grid
double kappa_second_at(const ConvexArc& arc, double s0) {
    const double h = arc.grid_step();
    auto k = [&](double s) { return arc.kappa_at_s(s); };
    return (-k(s0 - 2 * h) + 16 * k(s0 - h) - 30 * k(s0) + 16 * k(s0 + h) - k(s0 + 2 * h)) /
           (12.0 * h * h);
}

}  // namespace

TEST_CASE("circle arc: constant curvature, exact closed form") {
    const ConvexArc arc = build_from_curvature(circle(1.0, kPi / 2.0), 1024);
    CHECK(arc.length == doctest::Approx(kPi / 2.0));
    for (std::size_t i = 0; i < arc.size(); i += 97) {
        CHECK(arc.kappa[i] == doctest::Approx(1.0));
        CHECK(arc.theta[i] == doctest::Approx(arc.s[i]).epsilon(1e-10));
        CHECK(arc.gamma[i].x == doctest::Approx(std::sin(arc.s[i])).epsilon(1e-9));
        CHECK(arc.gamma[i].y == doctest::Approx(1.0 - std::cos(arc.s[i])).epsilon(1e-9));
    }
}

TEST_CASE("constant curvature samples build a circle of radius 1/kappa") {
    CurveSpec s;
    s.kind = CurveSpec::Kind::CurvatureSamples;
    s.kappa_samples.assign(129, 2.0);
    s.total_length = 1.0;
    const ConvexArc arc = build_from_curvature(s, 512);
    // congruent to a circle of radius 1/2 centered at (0, 1/2)
    for (std::size_t i = 0; i < arc.size(); i += 31) {
        const double dx = arc.gamma[i].x - 0.0, dy = arc.gamma[i].y - 0.5;
        CHECK(std::hypot(dx, dy) == doctest::Approx(0.5).epsilon(1e-9));
    }
}

TEST_CASE("polynomial curvature: theta(1) equals the exact antiderivative") {
    CurveSpec s;
    s.kind = CurveSpec::Kind::CurvatureSamples;
    s.total_length = 1.0;
    const int n = 2048;
    s.kappa_samples.resize(n);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        s.kappa_samples[i] = 1.0 + t * t;
    }
    const ConvexArc arc = build_from_curvature(s, n);
    CHECK(std::abs(arc.theta.back() - arc.theta.front() - 4.0 / 3.0) < 1e-8);
}

TEST_CASE("graph builds: vertex curvature and arclength") {
    SUBCASE("parabola vertex curvature equals h''(0)") {
        const ConvexArc arc = build_from_graph(parabola(1.0, 1.0), 4097);
        const double s0 = arc.graph->s_of_y[(arc.size() - 1) / 2];
        CHECK(arc.kappa_at_s(s0) == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("perturbed parabola: kappa''(0) = 24a - 3 lambda^3") {
        const ConvexArc arc = build_from_graph(pparabola(1.0, 1.0 / 8.0, 0.5), 4097);
        const double s0 = arc.graph->s_of_y[(arc.size() - 1) / 2];
        CHECK(std::abs(kappa_second_at(arc, s0) - 0.0) < 5e-4);
        const ConvexArc arc2 = build_from_graph(pparabola(1.0, 0.17, 0.4), 4097);
        const double s02 = arc2.graph->s_of_y[(arc2.size() - 1) / 2];
        CHECK(kappa_second_at(arc2, s02) == doctest::Approx(24.0 * 0.17 - 3.0).epsilon(2e-3));
    }
    SUBCASE("arclength matches the adaptive quadrature oracle") {
        const ConvexArc arc = build_from_graph(parabola(2.0, 0.5), 4096);
        const double oracle = oracles::adaptive_simpson(
            [](double y) { return std::sqrt(1.0 + 4.0 * y * y); }, -0.5, 0.5, 1e-14);
        CHECK(std::abs(arc.length - oracle) < 1e-8);
    }
    SUBCASE("s(y) table is strictly monotone") {
        const ConvexArc arc = build_from_graph(parabola(1.0, 1.0), 1024);
        for (std::size_t i = 1; i < arc.graph->s_of_y.size(); ++i)
            CHECK(arc.graph->s_of_y[i] > arc.graph->s_of_y[i - 1]);
    }
}

TEST_CASE("colinear-tangent margin delta0") {
    SUBCASE("quarter circle: sqrt(2)") {
        const ConvexArc arc = build_from_curvature(circle(1.0, kPi / 2.0), 256);
        CHECK(check_no_colinear_tangents(arc) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    }
    SUBCASE("circle of extent theta: 2 cos(theta/2)") {
        for (double extent : {0.5, 1.2, 2.8}) {
            const ConvexArc arc = build_from_curvature(circle(1.0, extent), 256);
            CHECK(arc.delta0 == doctest::Approx(2.0 * std::cos(extent / 2.0)).epsilon(1e-9));
        }
    }
    SUBCASE("narrow parabola: delta0 -> 2") {
        const ConvexArc arc = build_from_graph(parabola(1.0, 0.01), 128);
        CHECK(arc.delta0 > 2.0 - 1e-3);
    }
    SUBCASE("total turning >= pi rejects") {
        CHECK_THROWS(build_from_curvature(circle(1.0, kPi + 0.01), 256));
    }
}

TEST_CASE("curvature positivity is enforced") {
    CurveSpec s;
    s.kind = CurveSpec::Kind::CurvatureSamples;
    s.kappa_samples = {1.0, 0.5, -0.1, 0.5, 1.0};
    s.total_length = 1.0;
    CHECK_THROWS(build_from_curvature(s, 128));
}

TEST_CASE("condition on the curvature second derivative at minima") {
    SUBCASE("circle: holds with margin 3/2 kappa^3") {
        const ConvexArc arc = build_from_curvature(circle(1.0, 1.5), 1024);
        const K2Report rep = check_k2_condition(arc);
        CHECK(rep.holds);
        CHECK(rep.margin == doctest::Approx(1.5).epsilon(1e-6));
        CHECK_FALSE(rep.endpoint_minimum);
    }
    SUBCASE("perturbed parabola a=0.17: holds (24a-3 = 1.08 < 1.5)") {
        const ConvexArc arc = build_from_graph(pparabola(1.0, 0.17, 0.4), 4097);
        const K2Report rep = check_k2_condition(arc);
        CHECK(rep.holds);
        CHECK(rep.margin == doctest::Approx(1.5 - 1.08).epsilon(0.02));
    }
    SUBCASE("perturbed parabola a=0.25: fails (24a-3 = 3 > 1.5)") {
        const ConvexArc arc = build_from_graph(pparabola(1.0, 0.25, 0.5), 4097);
        const K2Report rep = check_k2_condition(arc);
        CHECK_FALSE(rep.holds);
        CHECK(rep.margin == doctest::Approx(1.5 - 3.0).epsilon(0.02));
    }
}

TEST_CASE("total turning equals the curvature integral") {
    CurveSpec s;
    s.kind = CurveSpec::Kind::CurvatureSamples;
    s.total_length = 1.3;
    const int n = 2048;
    s.kappa_samples.resize(n);
    for (int i = 0; i < n; ++i) {
        const double t = 1.3 * i / (n - 1);
        s.kappa_samples[i] = 1.0 + 0.3 * std::sin(2.0 * t);
    }
    const ConvexArc arc = build_from_curvature(s, n);
    const double oracle = oracles::adaptive_simpson(
        [](double t) { return 1.0 + 0.3 * std::sin(2.0 * t); }, 0.0, 1.3, 1e-14);
    CHECK(std::abs(arc.theta.back() - arc.theta.front() - oracle) < 1e-8);
}

TEST_CASE("rebuilding a circle from its own sampled curvature reproduces gamma") {
    const ConvexArc ref = build_from_curvature(circle(1.0, 1.4), 2048);
    CurveSpec s;
    s.kind = CurveSpec::Kind::CurvatureSamples;
    s.kappa_samples = ref.kappa;
    s.total_length = ref.length;
    const ConvexArc rebuilt = build_from_curvature(s, 2048);
    for (std::size_t i = 0; i < ref.size(); i += 101) {
        CHECK(std::abs(rebuilt.gamma[i].x - ref.gamma[i].x) < 1e-6);
        CHECK(std::abs(rebuilt.gamma[i].y - ref.gamma[i].y) < 1e-6);
    }
}

TEST_CASE("margin of the minimum-curvature condition is scale covariant") {
    SUBCASE("circle") {
        const double m1 = check_k2_condition(build_from_curvature(circle(1.0, 1.5), 1024)).margin;
        const double m2 = check_k2_condition(build_from_curvature(circle(2.0, 1.5), 1024)).margin;
        CHECK(m2 == doctest::Approx(m1 / 8.0).epsilon(1e-9));
    }
    SUBCASE("perturbed parabola") {
        const double c = 2.0;  // dilation factor
        const ConvexArc a1 = build_from_graph(pparabola(1.0, 0.17, 0.4), 4097);
        const ConvexArc a2 =
            build_from_graph(pparabola(1.0 / c, 0.17 / (c * c * c), 0.4 * c), 4097);
        const double m1 = check_k2_condition(a1).margin;
        const double m2 = check_k2_condition(a2).margin;
        CHECK(m2 == doctest::Approx(m1 / (c * c * c)).epsilon(5e-3));
    }
}

TEST_CASE("unit-speed and monotone-theta invariants hold after construction") {
    const ConvexArc arc = build_from_graph(pparabola(1.0, 0.125, 0.7), 2049);
    const double h = arc.grid_step();
    for (std::size_t i = 1; i + 1 < arc.size(); i += 53) {
        const Vec2 d = (arc.gamma[i + 1] - arc.gamma[i - 1]) * (0.5 / h);
        CHECK(std::abs(d.norm() - 1.0) < 10.0 * h * h);
        CHECK(arc.theta[i] > arc.theta[i - 1]);
    }
}
