#include "frext/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "frext/numerics.hpp"

namespace frext {

void ArcFunction::validate() const {
    if (!arc) throw std::invalid_argument("ArcFunction: null arc");
    if (values.size() != arc->param_grid().size())
        throw std::invalid_argument("ArcFunction: sample count does not match the arc grid");
    if (measure == MeasureKind::Projection && !arc->graph)
        throw std::invalid_argument("ArcFunction: projection measure needs a graph-built arc");
    for (const cplx& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("ArcFunction: non-finite sample");
        if (nonneg && (v.imag() != 0.0 || v.real() < 0.0))
            throw std::invalid_argument("ArcFunction: nonneg flag violated");
    }
}

ArcFunction make_arc_function(const ConvexArc& arc, MeasureKind measure,
                              const std::vector<cplx>& values, bool nonneg) {
    ArcFunction f;
    f.arc = &arc;
    f.measure = measure;
    f.values = values;
    f.nonneg = nonneg;
    f.validate();
    return f;
}

std::vector<double> sigma_weights(const ConvexArc& arc, MeasureKind measure) {
    const std::size_t n = arc.param_grid().size();
    std::vector<double> w(n, 1.0);
    if (!arc.graph) {
        if (measure == MeasureKind::Projection)
            throw std::invalid_argument("sigma_weights: projection measure needs a graph arc");
        return w;
    }
    const auto& g = *arc.graph;
    for (std::size_t i = 0; i < n; ++i) {
        const double speed = std::sqrt(1.0 + g.hp[i] * g.hp[i]);
        w[i] = (measure == MeasureKind::Arclength ? speed : 1.0) * g.taper[i];
    }
    return w;
}

double l2_sigma_norm(const ArcFunction& f) {
    f.validate();
    const auto w = sigma_weights(*f.arc, f.measure);
    const auto sw = simpson_weights(f.size(), f.arc->param_step());
    std::vector<double> terms(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) terms[i] = std::norm(f.values[i]) * w[i] * sw[i];
    return std::sqrt(std::max(0.0, pairwise_sum(terms)));
}

cplx integral_sigma(const ArcFunction& f) {
    f.validate();
    const auto w = sigma_weights(*f.arc, f.measure);
    const auto sw = simpson_weights(f.size(), f.arc->param_step());
    std::vector<cplx> terms(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) terms[i] = f.values[i] * (w[i] * sw[i]);
    return pairwise_sum(terms);
}

double l1_sigma_norm(const ArcFunction& f) {
    f.validate();
    const auto w = sigma_weights(*f.arc, f.measure);
    const auto sw = simpson_weights(f.size(), f.arc->param_step());
    std::vector<double> terms(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) terms[i] = std::abs(f.values[i]) * w[i] * sw[i];
    return pairwise_sum(terms);
}

ArcFunction restrict_to_cap(const ArcFunction& f, const Cap& cap) {
    f.validate();
    if (cap.radius <= 0.0) throw std::invalid_argument("restrict_to_cap: radius must be positive");
    ArcFunction out = f;
    const auto& arc = *f.arc;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (std::abs(arc.s_of_param(i) - cap.center) >= cap.radius) out.values[i] = 0.0;
    }
    return out;
}

bool cap_index_range(const ConvexArc& arc, const Cap& cap, std::size_t& lo, std::size_t& hi) {
    if (cap.radius <= 0.0) throw std::invalid_argument("cap_index_range: radius must be positive");
    const double s_lo = std::max(0.0, cap.center - cap.radius);
    const double s_hi = std::min(arc.length, cap.center + cap.radius);
    if (s_lo >= arc.length || s_hi <= 0.0 || s_lo >= s_hi) return false;
    if (arc.graph) {
        const double y_lo = arc.param_of_s(s_lo), y_hi = arc.param_of_s(s_hi);
        const auto& y = arc.graph->y;
        const double hy = arc.param_step();
        long a = std::lround((y_lo - y.front()) / hy);
        long b = std::lround((y_hi - y.front()) / hy);
        a = std::clamp<long>(a, 0, static_cast<long>(y.size()) - 1);
        b = std::clamp<long>(b, 0, static_cast<long>(y.size()) - 1);
        if (b <= a) return false;
        lo = static_cast<std::size_t>(a);
        hi = static_cast<std::size_t>(b);
        return true;
    }
    const double h = arc.grid_step();
    long a = std::lround(s_lo / h), b = std::lround(s_hi / h);
    a = std::clamp<long>(a, 0, static_cast<long>(arc.size()) - 1);
    b = std::clamp<long>(b, 0, static_cast<long>(arc.size()) - 1);
    if (b <= a) return false;
    lo = static_cast<std::size_t>(a);
    hi = static_cast<std::size_t>(b);
    return true;
}

double cap_integral(const ConvexArc& arc, const Cap& cap, MeasureKind measure,
                    const std::vector<double>& g) {
    std::size_t lo, hi;
    if (!cap_index_range(arc, cap, lo, hi)) return 0.0;
    const auto w = sigma_weights(arc, measure);
    const double hp = arc.param_step();
    double acc = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) {
        const double trap = (i == lo || i == hi) ? 0.5 : 1.0;  // half-weight at cap edges
        acc += g[i] * w[i] * hp * trap;
    }
    return acc;
}

double cap_measure(const ConvexArc& arc, const Cap& cap, MeasureKind measure) {
    std::size_t lo, hi;
    if (!cap_index_range(arc, cap, lo, hi)) return 0.0;
    std::vector<double> ones(arc.param_grid().size(), 1.0);
    return cap_integral(arc, cap, measure, ones);
}

void PlaneGrid::validate() const {
    if (nx < 2 || nt < 2) throw std::invalid_argument("PlaneGrid: nx, nt must be >= 2");
    if (!(x_max > x_min) || !(t_max > t_min))
        throw std::invalid_argument("PlaneGrid: degenerate ranges");
}

double l2_norm_field(const RealField& field) {
    std::vector<double> terms(field.values.size());
    for (std::size_t i = 0; i < field.values.size(); ++i)
        terms[i] = field.values[i] * field.values[i];
    return std::sqrt(pairwise_sum(terms) * field.cell_area());
}

double integral_field(const RealField& field) {
    return pairwise_sum(field.values) * field.cell_area();
}

double lp_norm_field(const RealField& field, double p) {
    std::vector<double> terms(field.values.size());
    for (std::size_t i = 0; i < field.values.size(); ++i)
        terms[i] = std::pow(std::abs(field.values[i]), p);
    return std::pow(pairwise_sum(terms) * field.cell_area(), 1.0 / p);
}

}  // namespace frext
