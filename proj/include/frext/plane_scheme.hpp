// plane_scheme.hpp
//
// Node sets and field evaluation for integrals of |f-hat sigma|^6 (and its
// relatives) over the plane. Two schemes:
//
//  * GraphFrameScheme: for graph arcs (y, h(y)). Substitutes t = tan(zeta)
//    and x = sqrt(lambda0 (1+t^2)) w, so the Gaussian-like field has a fixed
//    profile in w and the zeta integrand stays bounded; the |t| <= R_k
//    truncations land on panel boundaries.
//
//  * PolarScheme: for general arcs; disks |(x,t)| <= R_k with a trapezoid
//    rule in the angle and Simpson panels in the radius.
//
// Both report the three truncated integrals; the tail is extrapolated with
// the model I(inf) - I(R) = c/R fitted by least squares.

#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "frext/fields.hpp"

namespace frext {

struct L6Control {
    std::array<double, 3> radii{40.0, 80.0, 160.0};
    // graph frame
    int zeta_panels_head = 20;  // [0, atan R1]
    int zeta_panels_mid = 6;    // [atan R1, atan R2]
    int zeta_panels_tail = 6;   // [atan R2, atan R3]
    double w_max = 8.0;
    int w_panels = 16;
    double points_per_cycle = 16.0;
    int min_u_points = 2001;
    int max_u_points = 400001;
    // polar
    int n_phi = 512;
    std::array<int, 3> n_rho{96, 64, 64};  // per radius panel, made odd internally
    int min_curve_points = 1025;
    int threads = 0;
};

struct L6Result {
    double value = 0.0;           // I(inf)^{1/6}
    double error_estimate = 0.0;  // |I(R3)^{1/6} - value|
    double i_infinity = 0.0;
    std::array<double, 3> truncated{};  // I(R1), I(R2), I(R3)
};

// Density in graph coordinates: field(x,t) = ∫ amplitude(u) e^{-i(xu + t h(u))} du
struct GraphDensity {
    std::function<cplx(double)> amplitude;
    std::function<double(double)> height;
    double u_lo = 0.0, u_hi = 0.0;
    double lambda0 = 1.0;    // h''(0), sets the x-scale
    double height_span = 0;  // max h - min h over the support (cycle estimate)
};

class GraphFrameScheme {
public:
    GraphFrameScheme(double lambda0, const L6Control& ctrl);

    struct Row {
        double t;
        double x_scale;   // sqrt(lambda0 (1+t^2))
        double weight;    // zeta GL weight * (1+t^2)
        int radius_group; // 0,1,2 for |t| <= R1, R2, R3
    };
    std::vector<Row> rows;
    std::vector<double> w_nodes, w_weights;
    double lambda0 = 1.0;
    L6Control ctrl;

    std::size_t node_count() const { return rows.size() * w_nodes.size(); }
    double node_weight(std::size_t row, std::size_t wi) const {
        return rows[row].weight * rows[row].x_scale * w_weights[wi];
    }
    int u_points_for_row(const GraphDensity& dens, const Row& row) const;

    // out[row * w_nodes.size() + wi] = field at (x_scale*w, t)
    void eval_field(const GraphDensity& dens, std::vector<cplx>& out) const;

    // Σ_nodes weight * integrand(|F|) restricted to radius groups, in fixed order.
    L6Result integrate_pow6(const std::vector<cplx>& field) const;

    // adjoint: g(u_k) = Σ_nodes coeff_node * e^{+i(x u_k + t h(u_k))} for a
    // uniform output grid u. coeff has one entry per node (row-major).
    void adjoint(const std::vector<cplx>& coeff, const std::function<double(double)>& height,
                 const std::vector<double>& u_out, std::vector<cplx>& g_out) const;
};

// Density along a general curve: field(x,t) = Σ_j amp_j w_j e^{-i (x,t)·pos_j}
struct CurveDensity {
    std::vector<Vec2> pos;
    std::vector<cplx> amp;          // density values
    std::vector<double> quad_w;     // quadrature weights (ds)
    double diameter = 0.0;          // max |pos| (cycle estimate)
};

class PolarScheme {
public:
    explicit PolarScheme(const L6Control& ctrl);

    std::vector<double> phi;  // uniform in [0, 2pi)
    double phi_weight = 0.0;
    struct Panel {
        double rho0, drho;
        int n;  // odd sample count, Simpson
        int radius_group;
    };
    std::vector<Panel> panels;
    std::vector<double> rho, rho_w;  // flattened nodes and Simpson weights
    std::vector<int> rho_group;
    L6Control ctrl;

    std::size_t node_count() const { return phi.size() * rho.size(); }
    // out[pi * rho.size() + ri]
    void eval_field(const CurveDensity& dens, std::vector<cplx>& out) const;
    L6Result integrate_pow6(const std::vector<cplx>& field) const;
    void adjoint(const std::vector<cplx>& coeff, const std::vector<Vec2>& pos_out,
                 std::vector<cplx>& g_out) const;
};

// Least-squares fit of I(R) = Iinf - c/R through three (R, I) pairs.
double fit_tail_model(const std::array<double, 3>& radii, const std::array<double, 3>& I);

// Builds a GraphDensity view of a sampled function on a graph arc
// (amplitude = f * measure weight, interpolated cubically).
GraphDensity graph_density_of(const ArcFunction& f);

// Builds a CurveDensity of a sampled function on any arc, refined so the
// curve quadrature resolves oscillations up to radius R3.
CurveDensity curve_density_of(const ArcFunction& f, const L6Control& ctrl);

}  // namespace frext
