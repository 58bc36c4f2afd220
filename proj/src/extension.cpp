#include "frext/extension.hpp"

#include <cmath>
#include <stdexcept>

#include "frext/convolution.hpp"
#include "frext/numerics.hpp"
#include "frext/parallel.hpp"

namespace frext {

ComplexField extend(const ArcFunction& f, const PlaneGrid& grid, int threads) {
    f.validate();
    grid.validate();
    const ConvexArc& arc = *f.arc;
    const auto w = sigma_weights(arc, f.measure);
    const auto sw = simpson_weights(f.size(), arc.param_step());
    std::vector<cplx> amp(f.size());
    std::vector<Vec2> pos(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        amp[i] = f.values[i] * w[i] * sw[i];
        pos[i] = arc.gamma_at_param(i);
    }

    ComplexField out;
    out.grid = grid;
    out.values.assign(grid.count(), cplx{0, 0});
    const double corner = std::max({std::hypot(grid.x_min, grid.t_min),
                                    std::hypot(grid.x_min, grid.t_max),
                                    std::hypot(grid.x_max, grid.t_min),
                                    std::hypot(grid.x_max, grid.t_max)});
    out.warning = corner * arc.grid_step() > 0.5;

    parallel_for(grid.count(), [&](std::size_t idx) {
        const int i = static_cast<int>(idx % grid.nx);
        const int j = static_cast<int>(idx / grid.nx);
        const double x = grid.x(i), t = grid.t(j);
        cplx acc{0, 0};
        for (std::size_t k = 0; k < amp.size(); ++k) {
            const double ph = -(x * pos[k].x + t * pos[k].y);
            acc += amp[k] * cplx{std::cos(ph), std::sin(ph)};
        }
        out.values[idx] = acc;
    }, threads);
    return out;
}

L6Result l6_norm_direct(const ArcFunction& f, const L6Control& ctrl) {
    f.validate();
    bool zero = true;
    for (const cplx& v : f.values)
        if (v != cplx{0, 0}) {
            zero = false;
            break;
        }
    if (zero) return L6Result{};

    std::vector<cplx> field;
    if (f.arc->graph) {
        GraphDensity dens = graph_density_of(f);
        GraphFrameScheme scheme(dens.lambda0, ctrl);
        scheme.eval_field(dens, field);
        return scheme.integrate_pow6(field);
    }
    CurveDensity dens = curve_density_of(f, ctrl);
    PolarScheme scheme(ctrl);
    scheme.eval_field(dens, field);
    return scheme.integrate_pow6(field);
}

double l6_norm_convolution(const ArcFunction& f, const TripleConvControl& ctrl) {
    f.validate();
    for (const cplx& v : f.values)
        if (v.imag() != 0.0)
            throw std::invalid_argument("l6_norm_convolution: requires a real function");
    RealField dens = triple_autoconvolution_field(f, ctrl);
    const double n2 = l2_norm_field(dens);
    return std::cbrt(2.0 * kPi * n2);
}

double rayleigh(const ArcFunction& f, const L6Control& ctrl) {
    const double denom = l2_sigma_norm(f);
    if (denom == 0.0) throw std::invalid_argument("rayleigh: zero function");
    return l6_norm_direct(f, ctrl).value / denom;
}

cplx gaussian_closed_form(GaussianKind kind, double lambda, double x, double t) {
    if (lambda <= 0.0) throw std::invalid_argument("gaussian_closed_form: lambda must be positive");
    const cplx one_it{1.0, t};
    const cplx inv = 1.0 / one_it;
    const cplx g1 = std::sqrt(2.0 * kPi / lambda) * std::pow(one_it, -0.5) *
                    std::exp(-x * x / (2.0 * lambda) * inv);
    switch (kind) {
        case GaussianKind::G1:
            return g1;
        case GaussianKind::G2:
            return (inv / lambda - x * x * inv * inv / (lambda * lambda)) * g1;
        case GaussianKind::G3:
            return (3.0 * inv * inv / (lambda * lambda) -
                    6.0 * x * x * inv * inv * inv / (lambda * lambda * lambda) +
                    x * x * x * x * inv * inv * inv * inv / (lambda * lambda * lambda * lambda)) *
                   g1;
        case GaussianKind::Phi1: {
            const double c_lambda = std::pow(4.0 * lambda * lambda * lambda / kPi, 0.25);
            return cplx{0.0, c_lambda / lambda} * std::sqrt(2.0 * kPi / lambda) *
                   std::pow(one_it, -1.5) * x * std::exp(-x * x / (2.0 * lambda) * inv);
        }
    }
    throw std::logic_error("gaussian_closed_form: unknown kind");
}

double foschi_constant(double mu) {
    if (mu <= 0.0) throw std::invalid_argument("foschi_constant: mu must be positive");
    return std::sqrt(2.0 * kPi) * std::pow(3.0, -1.0 / 12.0) * std::pow(mu, -1.0 / 6.0);
}

}  // namespace frext
