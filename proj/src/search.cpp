#include "frext/search.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "frext/numerics.hpp"

namespace frext {

namespace {

struct Engine {
    const ConvexArc* arc = nullptr;
    L6Control ctrl;
    std::optional<GraphFrameScheme> gs;
    std::optional<PolarScheme> ps;

    explicit Engine(const ConvexArc& a, const L6Control& c) : arc(&a), ctrl(c) {
        if (arc->graph)
            gs.emplace(arc->graph->spec.hpp(0.0), ctrl);
        else
            ps.emplace(ctrl);
    }

    L6Result eval(const ArcFunction& f, std::vector<cplx>& field) const {
        if (gs) {
            GraphDensity dens = graph_density_of(f);
            gs->eval_field(dens, field);
            return gs->integrate_pow6(field);
        }
        CurveDensity dens = curve_density_of(f, ctrl);
        ps->eval_field(dens, field);
        return ps->integrate_pow6(field);
    }

    // nonnegative pullback of |F|^4 F through the adjoint
    std::vector<double> pullback(const std::vector<cplx>& field) const {
        std::vector<cplx> coeff(field.size());
        if (gs) {
            const std::size_t nw = gs->w_nodes.size();
            for (std::size_t r = 0; r < gs->rows.size(); ++r)
                for (std::size_t wi = 0; wi < nw; ++wi) {
                    const cplx F = field[r * nw + wi];
                    const double a2 = std::norm(F);
                    coeff[r * nw + wi] = gs->node_weight(r, wi) * a2 * a2 * F;
                }
            const CurveSpec spec = arc->graph->spec;
            std::vector<cplx> g;
            gs->adjoint(coeff, [spec](double u) { return spec.h(u); }, arc->param_grid(), g);
            std::vector<double> out(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) out[i] = std::max(0.0, g[i].real());
            return out;
        }
        const std::size_t nr = ps->rho.size();
        for (std::size_t pi = 0; pi < ps->phi.size(); ++pi)
            for (std::size_t ri = 0; ri < nr; ++ri) {
                const cplx F = field[pi * nr + ri];
                const double a2 = std::norm(F);
                coeff[pi * nr + ri] =
                    ps->phi_weight * ps->rho_w[ri] * ps->rho[ri] * a2 * a2 * F;
            }
        std::vector<Vec2> pos(arc->size());
        for (std::size_t i = 0; i < arc->size(); ++i) pos[i] = arc->gamma_at_param(i);
        std::vector<cplx> g;
        ps->adjoint(coeff, pos, g);
        std::vector<double> out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) out[i] = std::max(0.0, g[i].real());
        return out;
    }

    ArcFunction blend(const ArcFunction& f, const std::vector<double>& g, double theta) const {
        ArcFunction gfun = f;
        for (std::size_t i = 0; i < g.size(); ++i) gfun.values[i] = g[i];
        const double gn = l2_sigma_norm(gfun);
        if (gn == 0.0)
            throw std::runtime_error("ascent_step: degenerate iterate (pullback vanished)");
        const double fn = l2_sigma_norm(f);
        ArcFunction out = f;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double v =
                (1.0 - theta) * f.values[i].real() / fn + theta * g[i] / gn;
            out.values[i] = std::max(0.0, v);
        }
        const double on = l2_sigma_norm(out);
        if (on == 0.0) throw std::runtime_error("ascent_step: degenerate blended iterate");
        for (auto& v : out.values) v /= on;
        out.nonneg = true;
        return out;
    }
};

void require_nonneg_nonzero(const ArcFunction& f, const char* who) {
    f.validate();
    bool nonzero = false;
    for (const cplx& v : f.values) {
        if (v.imag() != 0.0 || v.real() < 0.0)
            throw std::invalid_argument(std::string(who) + ": requires a nonnegative function");
        if (v.real() > 0.0) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument(std::string(who) + ": zero function");
}

}  // namespace

ArcFunction ascent_step(const ArcFunction& f, double damping, const L6Control& ctrl) {
    require_nonneg_nonzero(f, "ascent_step");
    if (!(damping > 0.0 && damping <= 1.0))
        throw std::invalid_argument("ascent_step: damping must lie in (0, 1]");
    Engine eng(*f.arc, ctrl);
    std::vector<cplx> field;
    eng.eval(f, field);
    return eng.blend(f, eng.pullback(field), damping);
}

SearchResult search(const ArcFunction& f0, const SearchParams& params) {
    require_nonneg_nonzero(f0, "search");
    Engine eng(*f0.arc, params.plane);

    ArcFunction cur = f0;
    {
        const double n0 = l2_sigma_norm(cur);
        for (auto& v : cur.values) v /= n0;
        cur.nonneg = true;
    }

    SearchResult out;
    std::vector<cplx> field;
    L6Result l6 = eng.eval(cur, field);
    double obj = l6.value;  // ||f||_2 = 1
    out.best = cur;
    out.c_lower = obj;
    out.error_estimate = l6.error_estimate;
    out.trace.push_back({0, obj, l6.error_estimate, params.damping0});

    double theta = params.damping0;
    int stall = 0;
    for (int it = 1; it <= params.max_iters; ++it) {
        ArcFunction next = eng.blend(cur, eng.pullback(field), theta);
        std::vector<cplx> next_field;
        const L6Result next_l6 = eng.eval(next, next_field);
        const double next_obj = next_l6.value;

        if (next_obj < obj) theta = std::max(params.damping_floor, 0.5 * theta);
        stall = std::abs(next_obj - obj) < params.stall_tol ? stall + 1 : 0;

        cur = std::move(next);
        field = std::move(next_field);
        obj = next_obj;
        out.trace.push_back({it, obj, next_l6.error_estimate, theta});
        if (obj > out.c_lower) {
            out.c_lower = obj;
            out.best = cur;
            out.error_estimate = next_l6.error_estimate;
        }
        if (stall >= params.stall_window) break;
    }
    return out;
}

DiagnosticsReport sequence_diagnostics(const std::vector<ArcFunction>& iterates,
                                       const ConcentrationControl& ctrl) {
    if (iterates.size() < 3)
        throw std::invalid_argument("sequence_diagnostics: need at least 3 iterates");
    const ConcentrationReport rep = concentration_metric(iterates, ctrl);
    DiagnosticsReport out;
    out.concentrating = rep.concentrated;
    out.point = rep.center;
    out.kappa_at_point = rep.kappa_at_center;
    out.lambda = rep.lambda;
    out.kappa_equals_lambda = rep.kappa_equals_lambda;
    out.fractions = rep.best_fraction;

    const ConvexArc& arc = *iterates.front().arc;
    std::vector<double> ladder = ctrl.radius_ladder;
    if (ladder.empty())
        for (int k = 3; k <= 7; ++k) ladder.push_back(arc.length * std::pow(2.0, -k));
    const double r0 = *std::min_element(ladder.begin(), ladder.end());
    out.profile = upper_profile(iterates.back(), Cap{rep.center, r0}, {1.0, 2.0, 4.0, 8.0});
    return out;
}

}  // namespace frext
