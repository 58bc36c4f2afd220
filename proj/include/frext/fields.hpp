// fields.hpp
//
// Densities sampled on arcs, plane grids and the quadrature/norm primitives
// consumed by every other module.

#pragma once

#include <complex>
#include <vector>

#include "frext/geometry.hpp"

namespace frext {

using cplx = std::complex<double>;

enum class MeasureKind { Arclength, Projection };

// A density on an arc, sampled on the arc's parameter grid (the uniform
// y grid for graph-built arcs, the uniform s grid otherwise). Projection
// measure is only legal on graph-built arcs.
struct ArcFunction {
    const ConvexArc* arc = nullptr;
    MeasureKind measure = MeasureKind::Arclength;
    std::vector<cplx> values;
    bool nonneg = false;  // when set, asserts Im = 0 and Re >= 0

    void validate() const;  // throws on shape/finite/nonneg violations
    std::size_t size() const { return values.size(); }
};

ArcFunction make_arc_function(const ConvexArc& arc, MeasureKind measure,
                              const std::vector<cplx>& values, bool nonneg = false);

// Samples fn(p) over the parameter grid.
template <typename Fn>
ArcFunction sample_arc_function(const ConvexArc& arc, MeasureKind measure, Fn&& fn,
                                bool nonneg = false) {
    ArcFunction f;
    f.arc = &arc;
    f.measure = measure;
    const auto& p = arc.param_grid();
    f.values.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) f.values[i] = fn(p[i]);
    f.nonneg = nonneg;
    f.validate();
    return f;
}

// Measure weight d sigma / d(parameter) at each parameter node: 1 on
// curvature-built arcs, sqrt(1+h'^2) * taper for arclength measure on graph
// arcs, taper alone for projection measure.
std::vector<double> sigma_weights(const ConvexArc& arc, MeasureKind measure);

// || f ||_{L^2(sigma)} by composite Simpson.
double l2_sigma_norm(const ArcFunction& f);

// ∫ f d sigma
cplx integral_sigma(const ArcFunction& f);

// ∫ |f| d sigma
double l1_sigma_norm(const ArcFunction& f);

// Zeroes every sample outside {|s - cap.center| < cap.radius} (cap clipped at
// the arc ends). Values at surviving samples are untouched, so restriction is
// idempotent and Parseval-consistent sample-wise.
ArcFunction restrict_to_cap(const ArcFunction& f, const Cap& cap);

// Index range [lo, hi] of parameter nodes inside the clipped cap.
// Returns false if the cap misses the grid entirely.
bool cap_index_range(const ConvexArc& arc, const Cap& cap, std::size_t& lo, std::size_t& hi);

// sigma-measure of the clipped cap, snapped to the grid (half-weight at the
// two boundary samples).
double cap_measure(const ConvexArc& arc, const Cap& cap, MeasureKind measure);

// ∫_cap g d sigma with the same snapped-boundary convention.
double cap_integral(const ConvexArc& arc, const Cap& cap, MeasureKind measure,
                    const std::vector<double>& g);

// ---------------------------------------------------------------------------

struct PlaneGrid {
    double x_min = 0, x_max = 0, t_min = 0, t_max = 0;
    int nx = 0, nt = 0;

    void validate() const;
    double dx() const { return (x_max - x_min) / (nx - 1); }
    double dt() const { return (t_max - t_min) / (nt - 1); }
    double x(int i) const { return x_min + dx() * i; }
    double t(int j) const { return t_min + dt() * j; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    std::size_t count() const { return static_cast<std::size_t>(nx) * nt; }
};

struct ComplexField {
    PlaneGrid grid;
    std::vector<cplx> values;
    bool warning = false;  // oscillation under-resolution
};

struct RealField {
    PlaneGrid grid;
    std::vector<double> values;

    double cell_area() const { return grid.dx() * grid.dt(); }
};

// sqrt( Σ v^2 dA ) over the field's grid cells
double l2_norm_field(const RealField& field);

// Σ v dA
double integral_field(const RealField& field);

// ( Σ v^p dA )^{1/p}
double lp_norm_field(const RealField& field, double p);

}  // namespace frext
