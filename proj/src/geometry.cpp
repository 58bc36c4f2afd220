#include "frext/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "frext/numerics.hpp"

namespace frext {

double Vec2::norm() const { return std::hypot(x, y); }

namespace {

double poly_psi(const std::vector<double>& c, double y, int deriv) {
    // c[k] multiplies y^(5+k)
    double sum = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const int p = static_cast<int>(k) + 5;
        if (p - deriv < 0) continue;
        double coef = c[k];
        for (int d = 0; d < deriv; ++d) coef *= (p - d);
        sum += coef * std::pow(y, p - deriv);
    }
    return sum;
}

// quintic smoothstep: 1 at t<=0, 0 at t>=1, C^2 joins
double smoothstep_down(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double t3 = t * t * t;
    return 1.0 - t3 * (10.0 - 15.0 * t + 6.0 * t * t);
}

void check_unit_speed(const ConvexArc& arc) {
    const double h = arc.grid_step();
    const double tol = 10.0 * h * h;
    for (std::size_t i = 1; i + 1 < arc.size(); ++i) {
        const Vec2 d = (arc.gamma[i + 1] - arc.gamma[i - 1]) * (0.5 / h);
        if (std::abs(d.norm() - 1.0) > tol)
            throw std::runtime_error("arc build: |gamma'| deviates from 1 beyond tolerance");
    }
}

void finalize_common(ConvexArc& arc) {
    arc.lambda_min = arc.kappa[0];
    for (double k : arc.kappa) arc.lambda_min = std::min(arc.lambda_min, k);
    if (arc.lambda_min <= 0.0)
        throw std::invalid_argument("arc build: curvature must be strictly positive");
    for (std::size_t i = 1; i < arc.theta.size(); ++i)
        if (!(arc.theta[i] > arc.theta[i - 1]))
            throw std::runtime_error("arc build: theta is not strictly increasing");
    // theta is monotone, so the tangent pair of maximal spread is the endpoints
    arc.delta0 = 2.0 * std::cos(0.5 * (arc.theta.back() - arc.theta.front()));
    if (arc.delta0 <= 0.0)
        throw std::invalid_argument(
            "arc build: colinear tangents (total turning >= pi), delta0 <= 0");
    check_unit_speed(arc);
}

}  // namespace

void CurveSpec::validate() const {
    switch (kind) {
        case Kind::Circle:
            if (radius <= 0.0) throw std::invalid_argument("circle: radius must be positive");
            if (extent <= 0.0) throw std::invalid_argument("circle: extent must be positive");
            break;
        case Kind::Parabola:
            if (mu <= 0.0) throw std::invalid_argument("parabola: mu must be positive");
            if (halfwidth <= 0.0) throw std::invalid_argument("parabola: halfwidth must be positive");
            break;
        case Kind::PerturbedParabola:
            if (lambda <= 0.0)
                throw std::invalid_argument("perturbed parabola: lambda must be positive");
            if (halfwidth <= 0.0)
                throw std::invalid_argument("perturbed parabola: halfwidth must be positive");
            break;
        case Kind::CurvatureSamples:
            if (kappa_samples.size() < 2)
                throw std::invalid_argument("curvature samples: need at least 2 samples");
            if (total_length <= 0.0)
                throw std::invalid_argument("curvature samples: length must be positive");
            for (double k : kappa_samples)
                if (k <= 0.0)
                    throw std::invalid_argument("curvature samples: curvature must be positive");
            break;
    }
}

double CurveSpec::h(double y) const {
    if (kind == Kind::Parabola) return 0.5 * mu * y * y;
    if (kind == Kind::PerturbedParabola)
        return 0.5 * lambda * y * y + a * y * y * y * y + poly_psi(psi, y, 0);
    throw std::invalid_argument("CurveSpec::h: not a graph kind");
}

double CurveSpec::hp(double y) const {
    if (kind == Kind::Parabola) return mu * y;
    if (kind == Kind::PerturbedParabola)
        return lambda * y + 4.0 * a * y * y * y + poly_psi(psi, y, 1);
    throw std::invalid_argument("CurveSpec::hp: not a graph kind");
}

double CurveSpec::hpp(double y) const {
    if (kind == Kind::Parabola) return mu;
    if (kind == Kind::PerturbedParabola)
        return lambda + 12.0 * a * y * y + poly_psi(psi, y, 2);
    throw std::invalid_argument("CurveSpec::hpp: not a graph kind");
}

Vec2 ConvexArc::gamma_at_param(std::size_t i) const {
    if (graph) return {graph->y[i], graph->h[i]};
    return gamma[i];
}

double ConvexArc::theta_at_param(std::size_t i) const {
    if (graph) return std::atan(graph->hp[i]);
    return theta[i];
}

double ConvexArc::kappa_at_param(std::size_t i) const {
    if (graph) {
        const double hp = graph->hp[i];
        return graph->spec.hpp(graph->y[i]) / std::pow(1.0 + hp * hp, 1.5);
    }
    return kappa[i];
}

double ConvexArc::param_of_s(double sq) const {
    if (!graph) return sq;
    const auto& tab = graph->s_of_y;
    sq = std::clamp(sq, tab.front(), tab.back());
    auto it = std::upper_bound(tab.begin(), tab.end(), sq);
    std::size_t i = it == tab.begin() ? 0 : static_cast<std::size_t>(it - tab.begin()) - 1;
    i = std::min(i, tab.size() - 2);
    // Newton on s(y); ds/dy = sqrt(1 + h'^2) is exact
    double y = graph->y[i] + (sq - tab[i]) / std::sqrt(1.0 + graph->hp[i] * graph->hp[i]);
    for (int it2 = 0; it2 < 30; ++it2) {
        // local cubic Hermite model of s(y) on the bracketing cell
        const double hy = graph->y[i + 1] - graph->y[i];
        const double t = std::clamp((y - graph->y[i]) / hy, 0.0, 1.0);
        const double d0 = std::sqrt(1.0 + graph->hp[i] * graph->hp[i]);
        const double d1 = std::sqrt(1.0 + graph->hp[i + 1] * graph->hp[i + 1]);
        const double t2 = t * t, t3 = t2 * t;
        const double sval = (2 * t3 - 3 * t2 + 1) * tab[i] + (t3 - 2 * t2 + t) * hy * d0 +
                            (-2 * t3 + 3 * t2) * tab[i + 1] + (t3 - t2) * hy * d1;
        const double hpv = graph->spec.hp(y);
        const double dsdy = std::sqrt(1.0 + hpv * hpv);
        const double step = (sval - sq) / dsdy;
        y -= step;
        if (std::abs(step) < 1e-14 * (1.0 + std::abs(y))) break;
    }
    return std::clamp(y, graph->y.front(), graph->y.back());
}

double ConvexArc::kappa_at_s(double sq) const {
    if (graph) {
        const double y = param_of_s(sq);
        const double hp = graph->spec.hp(y);
        return graph->spec.hpp(y) / std::pow(1.0 + hp * hp, 1.5);
    }
    return interp_uniform_cubic<double>(std::span<const double>(kappa), s.front(), grid_step(), sq);
}

ConvexArc build_from_curvature(const CurveSpec& spec, int n) {
    spec.validate();
    if (n < 64) throw std::invalid_argument("build_from_curvature: need n >= 64");
    if (spec.kind == CurveSpec::Kind::Parabola || spec.kind == CurveSpec::Kind::PerturbedParabola)
        throw std::invalid_argument("build_from_curvature: use build_from_graph for graph kinds");

    ConvexArc arc;
    if (spec.kind == CurveSpec::Kind::Circle) {
        arc.length = spec.radius * spec.extent;
        arc.kappa.assign(n, 1.0 / spec.radius);
    } else {
        arc.length = spec.total_length;
        arc.kappa.resize(n);
        const auto& ks = spec.kappa_samples;
        if (static_cast<int>(ks.size()) == n) {
            arc.kappa = ks;
        } else {
            const double hs = arc.length / (ks.size() - 1);
            for (int i = 0; i < n; ++i) {
                const double si = arc.length * i / (n - 1);
                arc.kappa[i] =
                    interp_uniform_cubic<double>(std::span<const double>(ks), 0.0, hs, si);
            }
        }
        for (double k : arc.kappa)
            if (k <= 0.0) throw std::invalid_argument("build_from_curvature: nonpositive curvature");
    }

    arc.s.resize(n);
    const double h = arc.length / (n - 1);
    for (int i = 0; i < n; ++i) arc.s[i] = h * i;

    arc.theta = cumulative_integral_uniform(std::span<const double>(arc.kappa), h);
    std::vector<double> c(n), sn(n);
    for (int i = 0; i < n; ++i) {
        c[i] = std::cos(arc.theta[i]);
        sn[i] = std::sin(arc.theta[i]);
    }
    const auto X = cumulative_integral_uniform(std::span<const double>(c), h);
    const auto Y = cumulative_integral_uniform(std::span<const double>(sn), h);
    arc.gamma.resize(n);
    for (int i = 0; i < n; ++i) arc.gamma[i] = {X[i], Y[i]};

    finalize_common(arc);
    return arc;
}

ConvexArc build_from_graph(const CurveSpec& spec, int n, double taper_margin) {
    spec.validate();
    if (n < 64) throw std::invalid_argument("build_from_graph: need n >= 64");
    if (spec.kind != CurveSpec::Kind::Parabola && spec.kind != CurveSpec::Kind::PerturbedParabola)
        throw std::invalid_argument("build_from_graph: spec must be a graph kind");
    if (taper_margin < 0.0) throw std::invalid_argument("build_from_graph: negative taper margin");

    const double w_total = spec.halfwidth + taper_margin;
    // strict convexity on the whole sampled domain
    for (int i = 0; i <= 4096; ++i) {
        const double y = -w_total + 2.0 * w_total * i / 4096.0;
        if (spec.hpp(y) <= 0.0)
            throw std::invalid_argument("build_from_graph: h'' <= 0 on the domain");
    }

    ConvexArc arc;
    ConvexArc::Graph g;
    g.spec = spec;
    g.halfwidth = spec.halfwidth;
    g.halfwidth_total = w_total;
    g.taper_margin = taper_margin;
    g.y.resize(n);
    g.h.resize(n);
    g.hp.resize(n);
    g.taper.resize(n);
    const double hy = 2.0 * w_total / (n - 1);
    std::vector<double> speed(n);
    for (int i = 0; i < n; ++i) {
        const double y = -w_total + hy * i;
        g.y[i] = y;
        g.h[i] = spec.h(y);
        g.hp[i] = spec.hp(y);
        speed[i] = std::sqrt(1.0 + g.hp[i] * g.hp[i]);
        g.taper[i] = taper_margin > 0.0
                         ? smoothstep_down((std::abs(y) - spec.halfwidth) / taper_margin)
                         : 1.0;
    }
    g.s_of_y = cumulative_integral_uniform(std::span<const double>(speed), hy);
    arc.length = g.s_of_y.back();
    arc.graph = std::move(g);

    // uniform arclength grid by inverting s(y)
    arc.s.resize(n);
    arc.gamma.resize(n);
    arc.theta.resize(n);
    arc.kappa.resize(n);
    const double hs = arc.length / (n - 1);
    for (int i = 0; i < n; ++i) {
        arc.s[i] = hs * i;
        const double y = arc.param_of_s(arc.s[i]);
        const double hpv = spec.hp(y);
        arc.gamma[i] = {y, spec.h(y)};
        arc.theta[i] = std::atan(hpv);
        arc.kappa[i] = spec.hpp(y) / std::pow(1.0 + hpv * hpv, 1.5);
    }

    finalize_common(arc);
    return arc;
}

double check_no_colinear_tangents(const ConvexArc& arc) { return arc.delta0; }

K2Report check_k2_condition(const ConvexArc& arc) {
    K2Report rep;
    const std::size_t n = arc.size();
    const double h = arc.grid_step();
    double kmin = arc.kappa[0], kmax = arc.kappa[0];
    for (double k : arc.kappa) {
        kmin = std::min(kmin, k);
        kmax = std::max(kmax, k);
    }
    const double band = 1e-9 * std::max(kmax - kmin, 1e-300);
    rep.tolerance = 1e-9 * 1.5 * kmin * kmin * kmin;

    double margin = std::numeric_limits<double>::infinity();
    bool interior_minimum = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (arc.kappa[i] > kmin + band) continue;
        if (i < 2 || i + 2 >= n) {
            // flag only minima the interior stencil cannot represent: an
            // endpoint minimum whose plateau does not extend inward
            const std::size_t probe = i < 2 ? 3 : n - 4;
            if (arc.kappa[probe] > kmin + band) rep.endpoint_minimum = true;
            continue;
        }
        interior_minimum = true;
        const double kpp = (-arc.kappa[i - 2] + 16.0 * arc.kappa[i - 1] - 30.0 * arc.kappa[i] +
                            16.0 * arc.kappa[i + 1] - arc.kappa[i + 2]) /
                           (12.0 * h * h);
        margin = std::min(margin, 1.5 * std::pow(arc.kappa[i], 3) - kpp);
    }
    if (!interior_minimum) {
        // all global minima sit at the arc ends: nothing to check in the interior
        rep.holds = true;
        rep.margin = std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.margin = margin;
    rep.holds = margin > rep.tolerance;
    return rep;
}

double max_graph_halfwidth(const CurveSpec& spec) {
    if (std::abs(spec.hp(0.0)) >= 1.0)
        throw std::invalid_argument("max_graph_halfwidth: |h'(0)| >= 1");
    double lo = 0.0, hi = 1.0;
    while (std::abs(spec.hp(hi)) < 1.0 && hi < 1e6) hi *= 2.0;
    if (hi >= 1e6) return 1e6;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (std::abs(spec.hp(mid)) < 1.0 ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace frext
