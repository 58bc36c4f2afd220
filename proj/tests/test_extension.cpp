#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "frext/extension.hpp"
#include "frext/numerics.hpp"

using namespace frext;

namespace {

ConvexArc circle_arc(double extent = kPi / 2.0, int n = 2049) {
    CurveSpec s;
    s.kind = CurveSpec::Kind::Circle;
    s.radius = 1.0;
    s.extent = extent;
    return build_from_curvature(s, n);
}

ConvexArc parabola_arc(double mu, double hw, int n = 4097) {
    CurveSpec s;
    s.kind = CurveSpec::Kind::Parabola;
    s.mu = mu;
    s.halfwidth = hw;
    return build_from_graph(s, n);
}

ArcFunction gaussian_on_parabola(const ConvexArc& arc, double mu) {
    return sample_arc_function(arc, MeasureKind::Projection, [mu](double y) {
        return cplx{std::exp(-0.5 * mu * y * y), 0.0};
    });
}

}  // namespace

TEST_CASE("extend: trivial cases and the closed-form Gaussian node") {
    const ConvexArc arc = parabola_arc(1.0, 6.0);
    PlaneGrid grid;
    grid.x_min = -1.5;
    grid.x_max = 1.5;
    grid.t_min = -1.0;
    grid.t_max = 1.0;
    grid.nx = 7;
    grid.nt = 5;

    SUBCASE("zero function gives the zero field") {
        const auto z = sample_arc_function(arc, MeasureKind::Projection,
                                           [](double) { return cplx{0.0, 0.0}; });
        const ComplexField f = extend(z, grid);
        for (const cplx& v : f.values) CHECK(std::abs(v) == 0.0);
    }
    SUBCASE("value at the origin is the sigma integral") {
        const auto g = gaussian_on_parabola(arc, 1.0);
        PlaneGrid g0 = grid;
        const ComplexField f = extend(g, g0);
        const cplx at_origin = f.values[g0.index(3, 2)];  // (0,0)
        CHECK(std::abs(at_origin - integral_sigma(g)) < 1e-12);
    }
    SUBCASE("Gaussian at (-1, 1) matches the closed form") {
        const ConvexArc wide = parabola_arc(1.0, 8.0, 8193);
        const auto g = gaussian_on_parabola(wide, 1.0);
        PlaneGrid pt;
        pt.x_min = -1.0;
        pt.x_max = 1.0;
        pt.t_min = 1.0;
        pt.t_max = 2.0;
        pt.nx = 2;
        pt.nt = 2;
        const ComplexField f = extend(g, pt);
        // f-hat sigma(-1, 1) = G1(1, 1)
        const cplx expected = gaussian_closed_form(GaussianKind::G1, 1.0, 1.0, 1.0);
        CHECK(std::abs(f.values[pt.index(0, 0)] - expected) < 1e-10);
    }
    SUBCASE("under-resolution sets the warning flag") {
        const ConvexArc coarse = parabola_arc(1.0, 6.0, 64);
        const auto g = gaussian_on_parabola(coarse, 1.0);
        PlaneGrid big = grid;
        big.x_max = 100.0;
        const ComplexField f = extend(g, big);
        CHECK(f.warning);
    }
}

TEST_CASE("closed-form Gaussian extensions") {
    CHECK(std::abs(gaussian_closed_form(GaussianKind::G1, 1.0, 0.0, 0.0) -
                   cplx{std::sqrt(2.0 * kPi), 0.0}) < 1e-14);
    for (double t : {-2.0, 0.0, 0.7}) {
        CHECK(std::abs(gaussian_closed_form(GaussianKind::Phi1, 1.3, 0.0, t)) == 0.0);
    }
    CHECK(std::abs(gaussian_closed_form(GaussianKind::G2, 1.0, 0.0, 0.0) -
                   cplx{std::sqrt(2.0 * kPi), 0.0}) < 1e-14);
    // principal branch: Re (1+it)^{-1/2} > 0
    const cplx g1 = gaussian_closed_form(GaussianKind::G1, 1.0, 0.3, 5.0);
    CHECK(std::abs(std::arg(g1)) < kPi / 2.0 + 0.4);
}

TEST_CASE("foschi constant") {
    CHECK(foschi_constant(1.0) == doctest::Approx(2.28734).epsilon(1e-5));
    CHECK(foschi_constant(2.0) == doctest::Approx(2.03779).epsilon(1e-5));
    CHECK(foschi_constant(64.0) / foschi_constant(1.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK_THROWS(foschi_constant(0.0));
}

TEST_CASE("direct L6 norm: Gaussian on the parabola reaches the sharp constant") {
    for (double mu : {1.0, 2.0}) {
        const double hw = 6.0 / std::sqrt(mu);
        const ConvexArc arc = parabola_arc(mu, hw);
        const auto g = gaussian_on_parabola(arc, mu);
        L6Control ctrl;
        ctrl.radii = {20.0, 40.0, 80.0};
        const L6Result r = l6_norm_direct(g, ctrl);
        const double ratio = r.value / l2_sigma_norm(g);
        CHECK(std::abs(ratio - foschi_constant(mu)) / foschi_constant(mu) < 1e-3);
        CHECK(r.truncated[0] < r.truncated[1]);
        CHECK(r.truncated[1] < r.truncated[2]);
    }
}

TEST_CASE("zero input gives zero norms") {
    const ConvexArc arc = circle_arc();
    const auto z = sample_arc_function(arc, MeasureKind::Arclength,
                                       [](double) { return cplx{0.0, 0.0}; });
    CHECK(l6_norm_direct(z).value == 0.0);
    CHECK(l6_norm_convolution(z) == 0.0);
}

TEST_CASE("two-route L6 agreement on the quarter circle") {
    const ConvexArc arc = circle_arc(kPi / 2.0, 1025);
    L6Control ctrl;
    ctrl.radii = {30.0, 60.0, 120.0};
    ctrl.n_phi = 512;
    TripleConvControl tc;
    tc.grid_n = 512;
    tc.samples = 384;

    SUBCASE("smooth bump") {
        const auto f = sample_arc_function(arc, MeasureKind::Arclength, [&](double s) {
            const double d = (s - arc.length / 2) / (arc.length / 5);
            return cplx{std::exp(-0.5 * d * d), 0.0};
        });
        const double direct = l6_norm_direct(f, ctrl).value;
        const double conv = l6_norm_convolution(f, tc);
        CHECK(std::abs(direct - conv) / direct < 0.02);
    }
    SUBCASE("characteristic function of the arc") {
        const auto f = sample_arc_function(arc, MeasureKind::Arclength,
                                           [](double) { return cplx{1.0, 0.0}; });
        const double direct = l6_norm_direct(f, ctrl).value;
        const double conv = l6_norm_convolution(f, tc);
        CHECK(std::abs(direct - conv) / direct < 0.02);
    }
}

TEST_CASE("rayleigh quotient") {
    const ConvexArc arc = parabola_arc(1.0, 6.0);
    const auto g = gaussian_on_parabola(arc, 1.0);
    L6Control ctrl;
    ctrl.radii = {20.0, 40.0, 80.0};
    SUBCASE("Gaussian on the parabola") {
        CHECK(std::abs(rayleigh(g, ctrl) - 2.28734) < 3e-3);
    }
    SUBCASE("homogeneity") {
        ArcFunction g7 = g;
        for (auto& v : g7.values) v *= 7.0;
        CHECK(std::abs(rayleigh(g7, ctrl) - rayleigh(g, ctrl)) < 1e-12);
    }
    SUBCASE("zero rejects") {
        const auto z = sample_arc_function(arc, MeasureKind::Projection,
                                           [](double) { return cplx{0.0, 0.0}; });
        CHECK_THROWS(rayleigh(z, ctrl));
    }
}

TEST_CASE("modulation covariance of the extension") {
    const ConvexArc arc = circle_arc(1.2, 257);
    const auto f = sample_arc_function(arc, MeasureKind::Arclength, [&](double s) {
        return cplx{1.0 + 0.3 * std::cos(s), 0.0};
    });
    const double x0 = 0.7, t0 = -0.4;
    ArcFunction fm = f;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Vec2 g = arc.gamma_at_param(i);
        const double ph = -(x0 * g.x + t0 * g.y);
        fm.values[i] *= cplx{std::cos(ph), std::sin(ph)};
    }
    PlaneGrid grid;
    grid.x_min = -1.0;
    grid.x_max = 1.0;
    grid.t_min = -1.0;
    grid.t_max = 1.0;
    grid.nx = 5;
    grid.nt = 5;
    PlaneGrid shifted = grid;
    shifted.x_min += x0;
    shifted.x_max += x0;
    shifted.t_min += t0;
    shifted.t_max += t0;
    const ComplexField a = extend(fm, grid);
    const ComplexField b = extend(f, shifted);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(std::abs(a.values[i] - b.values[i]) < 1e-10);
}

TEST_CASE("pointwise bound by the L1 norm") {
    const ConvexArc arc = circle_arc(1.0, 513);
    const auto f = sample_arc_function(arc, MeasureKind::Arclength, [&](double s) {
        return cplx{0.5 + std::sin(2.0 * s) * std::sin(2.0 * s), 0.0};
    });
    const double l1 = l1_sigma_norm(f);
    PlaneGrid grid;
    grid.x_min = -30.0;
    grid.x_max = 30.0;
    grid.t_min = -30.0;
    grid.t_max = 30.0;
    grid.nx = 21;
    grid.nt = 21;
    const ComplexField F = extend(f, grid);
    for (const cplx& v : F.values) CHECK(std::abs(v) <= l1 * (1.0 + 1e-9));
}

TEST_CASE("Galilean shift invariance of the parabola rayleigh quotient") {
    const ConvexArc arc = parabola_arc(1.0, 6.0, 2049);
    const auto g = gaussian_on_parabola(arc, 1.0);
    ArcFunction gshift = g;
    const double c = 0.8;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double y = arc.param_grid()[i];
        gshift.values[i] *= cplx{std::cos(c * y), std::sin(c * y)};
    }
    L6Control ctrl;
    ctrl.radii = {20.0, 40.0, 80.0};
    ctrl.w_max = 9.0;
    const double r0 = rayleigh(g, ctrl);
    const double r1 = rayleigh(gshift, ctrl);
    CHECK(std::abs(r1 - r0) / r0 < 1e-3);
}
