// geometry.hpp
//
// Planar convex arcs parametrized by arclength: construction from curvature
// data or from a convex graph, plus the geometric checks (colinear-tangent
// margin, curvature-minimum second-derivative condition) the rest of the
// library relies on.

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace frext {

struct Vec2 {
    double x = 0.0, y = 0.0;
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double c) const { return {c * x, c * y}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const;
};

// An arclength interval {|s - center| < radius} on an arc.
struct Cap {
    double center = 0.0;
    double radius = 0.0;
};

struct CurveSpec {
    enum class Kind { Circle, Parabola, PerturbedParabola, CurvatureSamples };
    Kind kind = Kind::Circle;

    // circle
    double radius = 1.0;
    double extent = 1.0;  // angular extent (radians)

    // parabola h(y) = mu y^2 / 2 on [-halfwidth, halfwidth]
    double mu = 1.0;

    // perturbed parabola h(y) = lambda y^2/2 + a y^4 + psi(y)
    double lambda = 1.0;
    double a = 0.0;
    std::vector<double> psi;  // coefficients of y^5, y^6, ... (degrees >= 5)

    double halfwidth = 1.0;  // graph kinds

    // curvature samples on a uniform s-grid
    std::vector<double> kappa_samples;
    double total_length = 0.0;

    void validate() const;  // throws std::invalid_argument

    // graph evaluations (parabola kinds only)
    double h(double y) const;
    double hp(double y) const;
    double hpp(double y) const;
};

struct ConvexArc {
    double length = 0.0;
    std::vector<double> s;      // uniform arclength grid on [0, length]
    std::vector<Vec2> gamma;    // positions on the s grid
    std::vector<double> theta;  // tangent angle on the s grid, strictly increasing
    std::vector<double> kappa;  // curvature on the s grid
    double lambda_min = 0.0;    // min kappa
    double delta0 = 0.0;        // colinear-tangent margin min |t(s)+t(s')|

    // Present for graph-built arcs. Sampled functions on such arcs live on
    // the uniform y grid; all quadratures carry the measure weight.
    struct Graph {
        CurveSpec spec;
        double halfwidth = 0.0;        // interval I half-width (taper starts here)
        double halfwidth_total = 0.0;  // including the mollifier taper
        double taper_margin = 0.0;     // 0 = hard edge, no taper
        std::vector<double> y;         // uniform
        std::vector<double> h, hp;     // graph height/slope at y nodes
        std::vector<double> s_of_y;    // arclength measured from y.front()
        std::vector<double> taper;     // eta_I weight at y nodes (1 if no taper)
    };
    std::optional<Graph> graph;

    double grid_step() const { return s[1] - s[0]; }
    std::size_t size() const { return s.size(); }

    // Grid that sampled functions use: y for graph arcs, s otherwise.
    const std::vector<double>& param_grid() const { return graph ? graph->y : s; }
    double param_step() const {
        const auto& p = param_grid();
        return p[1] - p[0];
    }
    // arclength coordinate of param node i
    double s_of_param(std::size_t i) const { return graph ? graph->s_of_y[i] : s[i]; }
    // position/tangent angle/curvature at param node i
    Vec2 gamma_at_param(std::size_t i) const;
    double theta_at_param(std::size_t i) const;
    double kappa_at_param(std::size_t i) const;
    // arclength -> parameter value (identity for curvature-built arcs)
    double param_of_s(double sq) const;

    // curvature at arclength s (interpolated)
    double kappa_at_s(double sq) const;
};

// Reconstructs the arc from curvature: theta by cumulative quadrature of
// kappa, gamma by quadrature of (cos theta, sin theta). Conventions:
// gamma(0) = origin, theta(0) = 0.
ConvexArc build_from_curvature(const CurveSpec& spec, int n);

// Builds a graph arc (y, h(y)) for the parabola kinds, keeping graph
// coordinates (vertex at the origin). `taper_margin` > 0 adds a smoothstep
// mollifier over [halfwidth, halfwidth + taper_margin] to the measure.
ConvexArc build_from_graph(const CurveSpec& spec, int n, double taper_margin = 0.0);

// Exact sample minimum of |t(s) + t(s')|.
double check_no_colinear_tangents(const ConvexArc& arc);

struct K2Report {
    bool holds = false;
    double margin = 0.0;  // min over global curvature minima of (3/2) kappa^3 - kappa''
    bool endpoint_minimum = false;
    double tolerance = 0.0;
};

// Checks d^2 kappa/ds^2 < (3/2) kappa^3 at every global curvature minimum.
// Minima within two grid cells of an arc endpoint are flagged and skipped
// (one-sided second differences are not meaningful there).
K2Report check_k2_condition(const ConvexArc& arc);

// Largest halfwidth with |h'| <= 1 on the interval, for graph specs.
double max_graph_halfwidth(const CurveSpec& spec);

}  // namespace frext
