#include "frext/plane_scheme.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "frext/numerics.hpp"
#include "frext/parallel.hpp"

namespace frext {

namespace {

std::vector<double> simpson_panel_weights(int n, double h) { return simpson_weights(n, h); }

}  // namespace

GraphFrameScheme::GraphFrameScheme(double lambda0_, const L6Control& c)
    : lambda0(lambda0_), ctrl(c) {
    if (!(c.radii[0] > 0 && c.radii[0] < c.radii[1] && c.radii[1] < c.radii[2]))
        throw std::invalid_argument("GraphFrameScheme: radii must be increasing and positive");
    const double z1 = std::atan(c.radii[0]), z2 = std::atan(c.radii[1]), z3 = std::atan(c.radii[2]);
    std::vector<double> zn, zw;
    std::vector<int> group;
    auto add = [&](double a, double b, int panels, int g) {
        std::size_t before = zn.size();
        gl8_panels(a, b, panels, zn, zw);
        group.resize(zn.size(), g);
        (void)before;
    };
    // negative t side first so rows are ordered by t
    add(-z3, -z2, c.zeta_panels_tail, 2);
    add(-z2, -z1, c.zeta_panels_mid, 1);
    add(-z1, z1, 2 * c.zeta_panels_head, 0);
    add(z1, z2, c.zeta_panels_mid, 1);
    add(z2, z3, c.zeta_panels_tail, 2);

    rows.resize(zn.size());
    for (std::size_t i = 0; i < zn.size(); ++i) {
        const double t = std::tan(zn[i]);
        const double sec2 = 1.0 + t * t;
        rows[i] = {t, std::sqrt(lambda0 * sec2), zw[i] * sec2, group[i]};
    }
    gl8_panels(-c.w_max, c.w_max, c.w_panels, w_nodes, w_weights);
}

int GraphFrameScheme::u_points_for_row(const GraphDensity& dens, const Row& row) const {
    const double u_range = dens.u_hi - dens.u_lo;
    const double x_max = row.x_scale * ctrl.w_max;
    const double u_abs = std::max(std::abs(dens.u_lo), std::abs(dens.u_hi));
    // total phase swing of x*u + t*h(u) over the support
    const double swing = x_max * u_range + std::abs(row.t) * std::max(dens.height_span, 1e-12) +
                         x_max * u_abs * 0.0;
    int n = static_cast<int>(ctrl.points_per_cycle * swing / (2.0 * kPi)) + ctrl.min_u_points;
    n = std::min(n, ctrl.max_u_points);
    if (n % 2 == 0) ++n;
    return n;
}

void GraphFrameScheme::eval_field(const GraphDensity& dens, std::vector<cplx>& out) const {
    const std::size_t nw = w_nodes.size();
    out.assign(rows.size() * nw, cplx{0.0, 0.0});
    parallel_for(rows.size(), [&](std::size_t r) {
        const Row& row = rows[r];
        const int nu = u_points_for_row(dens, row);
        const double du = (dens.u_hi - dens.u_lo) / (nu - 1);
        const auto sw = simpson_weights(nu, du);
        std::vector<cplx> cj(nu);
        for (int j = 0; j < nu; ++j) {
            const double u = dens.u_lo + du * j;
            const double ph = -row.t * dens.height(u);
            cj[j] = dens.amplitude(u) * sw[j] * cplx{std::cos(ph), std::sin(ph)};
        }
        for (std::size_t wi = 0; wi < nw; ++wi) {
            const double x = row.x_scale * w_nodes[wi];
            // e^{-i x u_j} via a phase recurrence over the uniform u grid
            const double p0 = -x * dens.u_lo, pd = -x * du;
            cplx e{std::cos(p0), std::sin(p0)};
            const cplx step{std::cos(pd), std::sin(pd)};
            cplx acc{0.0, 0.0};
            for (int j = 0; j < nu; ++j) {
                acc += cj[j] * e;
                e *= step;
            }
            out[r * nw + wi] = acc;
        }
    }, ctrl.threads);
}

L6Result GraphFrameScheme::integrate_pow6(const std::vector<cplx>& field) const {
    const std::size_t nw = w_nodes.size();
    std::array<std::vector<double>, 3> terms;
    for (auto& v : terms) v.reserve(field.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t wi = 0; wi < nw; ++wi) {
            const double a2 = std::norm(field[r * nw + wi]);
            terms[rows[r].radius_group].push_back(a2 * a2 * a2 * node_weight(r, wi));
        }
    }
    L6Result res;
    double acc = 0.0;
    for (int g = 0; g < 3; ++g) {
        acc += pairwise_sum(terms[g]);
        res.truncated[g] = acc;
    }
    for (int g = 0; g < 2; ++g)
        if (!(res.truncated[g] < res.truncated[g + 1]))
            throw std::runtime_error(
                "l6 plane integral: truncated integrals are not strictly increasing "
                "(under-resolved field); I(R1..R3) = " +
                std::to_string(res.truncated[0]) + ", " + std::to_string(res.truncated[1]) + ", " +
                std::to_string(res.truncated[2]));
    res.i_infinity = fit_tail_model(ctrl.radii, res.truncated);
    res.value = std::pow(res.i_infinity, 1.0 / 6.0);
    res.error_estimate = std::abs(std::pow(res.truncated[2], 1.0 / 6.0) - res.value);
    return res;
}

void GraphFrameScheme::adjoint(const std::vector<cplx>& coeff,
                               const std::function<double(double)>& height,
                               const std::vector<double>& u_out, std::vector<cplx>& g_out) const {
    const std::size_t nw = w_nodes.size();
    const std::size_t nu = u_out.size();
    const double du = u_out[1] - u_out[0];
    g_out.assign(nu, cplx{0.0, 0.0});
    // per-row partial sums of coeff * e^{+i x u}, then one height phase per (row, u)
    std::vector<std::vector<cplx>> row_acc(rows.size());
    parallel_for(rows.size(), [&](std::size_t r) {
        auto& acc = row_acc[r];
        acc.assign(nu, cplx{0.0, 0.0});
        for (std::size_t wi = 0; wi < nw; ++wi) {
            const cplx c = coeff[r * nw + wi];
            if (c == cplx{0.0, 0.0}) continue;
            const double x = rows[r].x_scale * w_nodes[wi];
            const double p0 = x * u_out[0], pd = x * du;
            cplx e{std::cos(p0), std::sin(p0)};
            const cplx step{std::cos(pd), std::sin(pd)};
            for (std::size_t k = 0; k < nu; ++k) {
                acc[k] += c * e;
                e *= step;
            }
        }
        const double t = rows[r].t;
        for (std::size_t k = 0; k < nu; ++k) {
            const double ph = t * height(u_out[k]);
            acc[k] *= cplx{std::cos(ph), std::sin(ph)};
        }
    }, ctrl.threads);
    // fixed-order merge
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t k = 0; k < nu; ++k) g_out[k] += row_acc[r][k];
}

PolarScheme::PolarScheme(const L6Control& c) : ctrl(c) {
    if (!(c.radii[0] > 0 && c.radii[0] < c.radii[1] && c.radii[1] < c.radii[2]))
        throw std::invalid_argument("PolarScheme: radii must be increasing and positive");
    phi.resize(c.n_phi);
    for (int i = 0; i < c.n_phi; ++i) phi[i] = 2.0 * kPi * i / c.n_phi;
    phi_weight = 2.0 * kPi / c.n_phi;
    double lo = 0.0;
    for (int g = 0; g < 3; ++g) {
        const double hi = c.radii[g];
        int n = c.n_rho[g];
        if (n % 2 == 0) ++n;
        Panel p{lo, (hi - lo) / (n - 1), n, g};
        panels.push_back(p);
        const auto w = simpson_panel_weights(n, p.drho);
        for (int i = 0; i < n; ++i) {
            rho.push_back(p.rho0 + p.drho * i);
            rho_w.push_back(w[i]);
            rho_group.push_back(g);
        }
        lo = hi;
    }
}

void PolarScheme::eval_field(const CurveDensity& dens, std::vector<cplx>& out) const {
    const std::size_t nr = rho.size();
    out.assign(phi.size() * nr, cplx{0.0, 0.0});
    parallel_for(phi.size(), [&](std::size_t pi) {
        const double cp = std::cos(phi[pi]), sp = std::sin(phi[pi]);
        std::vector<cplx> acc(nr, cplx{0.0, 0.0});
        for (std::size_t j = 0; j < dens.pos.size(); ++j) {
            const cplx cj = dens.amp[j] * dens.quad_w[j];
            if (cj == cplx{0.0, 0.0}) continue;
            const double e = cp * dens.pos[j].x + sp * dens.pos[j].y;
            std::size_t base = 0;
            for (const Panel& p : panels) {
                const double p0 = -p.rho0 * e, pd = -p.drho * e;
                cplx ph{std::cos(p0), std::sin(p0)};
                const cplx step{std::cos(pd), std::sin(pd)};
                for (int i = 0; i < p.n; ++i) {
                    acc[base + i] += cj * ph;
                    ph *= step;
                }
                base += p.n;
            }
        }
        for (std::size_t i = 0; i < nr; ++i) out[pi * nr + i] = acc[i];
    }, ctrl.threads);
}

L6Result PolarScheme::integrate_pow6(const std::vector<cplx>& field) const {
    const std::size_t nr = rho.size();
    std::array<std::vector<double>, 3> terms;
    for (std::size_t pi = 0; pi < phi.size(); ++pi) {
        for (std::size_t i = 0; i < nr; ++i) {
            const double a2 = std::norm(field[pi * nr + i]);
            terms[rho_group[i]].push_back(a2 * a2 * a2 * rho[i] * rho_w[i] * phi_weight);
        }
    }
    L6Result res;
    double acc = 0.0;
    for (int g = 0; g < 3; ++g) {
        acc += pairwise_sum(terms[g]);
        res.truncated[g] = acc;
    }
    for (int g = 0; g < 2; ++g)
        if (!(res.truncated[g] < res.truncated[g + 1]))
            throw std::runtime_error(
                "l6 plane integral (polar): truncated integrals are not strictly increasing; "
                "I(R1..R3) = " +
                std::to_string(res.truncated[0]) + ", " + std::to_string(res.truncated[1]) + ", " +
                std::to_string(res.truncated[2]));
    res.i_infinity = fit_tail_model(ctrl.radii, res.truncated);
    res.value = std::pow(res.i_infinity, 1.0 / 6.0);
    res.error_estimate = std::abs(std::pow(res.truncated[2], 1.0 / 6.0) - res.value);
    return res;
}

void PolarScheme::adjoint(const std::vector<cplx>& coeff, const std::vector<Vec2>& pos_out,
                          std::vector<cplx>& g_out) const {
    const std::size_t nr = rho.size();
    const std::size_t ns = pos_out.size();
    g_out.assign(ns, cplx{0.0, 0.0});
    std::vector<std::vector<cplx>> phi_acc(phi.size());
    parallel_for(phi.size(), [&](std::size_t pi) {
        const double cp = std::cos(phi[pi]), sp = std::sin(phi[pi]);
        auto& acc = phi_acc[pi];
        acc.assign(ns, cplx{0.0, 0.0});
        for (std::size_t k = 0; k < ns; ++k) {
            const double e = cp * pos_out[k].x + sp * pos_out[k].y;
            std::size_t base = 0;
            cplx sum{0.0, 0.0};
            for (const Panel& p : panels) {
                const double p0 = p.rho0 * e, pd = p.drho * e;
                cplx ph{std::cos(p0), std::sin(p0)};
                const cplx step{std::cos(pd), std::sin(pd)};
                for (int i = 0; i < p.n; ++i) {
                    sum += coeff[pi * nr + base + i] * ph;
                    ph *= step;
                }
                base += p.n;
            }
            acc[k] = sum;
        }
    }, ctrl.threads);
    for (std::size_t pi = 0; pi < phi.size(); ++pi)
        for (std::size_t k = 0; k < ns; ++k) g_out[k] += phi_acc[pi][k];
}

double fit_tail_model(const std::array<double, 3>& radii, const std::array<double, 3>& I) {
    // least squares for I(R) = Iinf - c / R
    double s11 = 3.0, s12 = 0.0, s22 = 0.0, b1 = 0.0, b2 = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double r = -1.0 / radii[k];
        s12 += r;
        s22 += r * r;
        b1 += I[k];
        b2 += r * I[k];
    }
    const double det = s11 * s22 - s12 * s12;
    return (b1 * s22 - b2 * s12) / det;
}

GraphDensity graph_density_of(const ArcFunction& f) {
    f.validate();
    if (!f.arc->graph) throw std::invalid_argument("graph_density_of: needs a graph-built arc");
    const auto& g = *f.arc->graph;
    auto w = sigma_weights(*f.arc, f.measure);
    auto vals = std::make_shared<std::vector<cplx>>(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) (*vals)[i] = f.values[i] * w[i];
    const double y0 = g.y.front(), hy = f.arc->param_step();
    const CurveSpec spec = g.spec;

    GraphDensity d;
    d.u_lo = g.y.front();
    d.u_hi = g.y.back();
    d.lambda0 = spec.hpp(0.0);
    double hmin = g.h.front(), hmax = hmin;
    for (double h : g.h) {
        hmin = std::min(hmin, h);
        hmax = std::max(hmax, h);
    }
    d.height_span = hmax - hmin;
    d.amplitude = [vals, y0, hy](double u) {
        return interp_uniform_cubic<cplx>(std::span<const cplx>(*vals), y0, hy, u);
    };
    d.height = [spec](double u) { return spec.h(u); };
    return d;
}

CurveDensity curve_density_of(const ArcFunction& f, const L6Control& ctrl) {
    f.validate();
    const ConvexArc& arc = *f.arc;
    CurveDensity d;
    double diam = 0.0;
    for (std::size_t i = 0; i < arc.size(); ++i)
        diam = std::max(diam, arc.gamma_at_param(i).norm());
    d.diameter = diam;

    // refine so that R3 * ds per sample stays well resolved
    const double span = arc.param_grid().back() - arc.param_grid().front();
    int n = static_cast<int>(ctrl.points_per_cycle * ctrl.radii[2] * span / (2.0 * kPi)) + 1;
    n = std::max({n, static_cast<int>(arc.size()), ctrl.min_curve_points});
    if (n % 2 == 0) ++n;

    const auto w = sigma_weights(arc, f.measure);
    const auto& p = arc.param_grid();
    const double p0 = p.front(), hp = arc.param_step();
    std::vector<cplx> weighted(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) weighted[i] = f.values[i] * w[i];

    d.pos.resize(n);
    d.amp.resize(n);
    d.quad_w = simpson_weights(n, span / (n - 1));
    std::vector<double> gx, gy;
    if (!arc.graph) {
        gx.resize(arc.size());
        gy.resize(arc.size());
        for (std::size_t i = 0; i < arc.size(); ++i) {
            gx[i] = arc.gamma[i].x;
            gy[i] = arc.gamma[i].y;
        }
    }
    for (int i = 0; i < n; ++i) {
        const double q = p0 + span * i / (n - 1);
        d.amp[i] = interp_uniform_cubic<cplx>(std::span<const cplx>(weighted), p0, hp, q);
        if (arc.graph)
            d.pos[i] = {q, arc.graph->spec.h(q)};
        else
            d.pos[i] = {interp_uniform_cubic<double>(std::span<const double>(gx), p0, hp, q),
                        interp_uniform_cubic<double>(std::span<const double>(gy), p0, hp, q)};
    }
    return d;
}

}  // namespace frext
