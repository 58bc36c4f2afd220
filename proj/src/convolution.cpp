#include "frext/convolution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace frext {

namespace {

struct Resampled {
    std::vector<Vec2> pos;
    std::vector<double> amp;      // value * measure weight * step (trapezoid mass)
    std::vector<double> val_arc;  // arclength density value (for the band model)
    std::vector<double> s;        // arclength coordinate
    std::vector<double> kappa;
};

// Uniform parameter resampling. Masses use trapezoid end weights so total
// mass is conserved. `clamp` zeroes negative interpolation overshoot (needed
// before fractional powers of nonnegative densities).
Resampled resample(const ArcFunction& f, int m, bool clamp = false) {
    f.validate();
    const ConvexArc& arc = *f.arc;
    const auto& p = arc.param_grid();
    const double p0 = p.front(), span = p.back() - p.front(), hp = arc.param_step();
    const auto w = sigma_weights(arc, f.measure);

    std::vector<double> real_vals(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) real_vals[i] = f.values[i].real();

    Resampled r;
    r.pos.resize(m);
    r.amp.resize(m);
    r.val_arc.resize(m);
    r.s.resize(m);
    r.kappa.resize(m);
    const double dq = span / (m - 1);
    std::vector<double> gx, gy;
    if (!arc.graph) {
        gx.resize(arc.size());
        gy.resize(arc.size());
        for (std::size_t i = 0; i < arc.size(); ++i) {
            gx[i] = arc.gamma[i].x;
            gy[i] = arc.gamma[i].y;
        }
    }
    std::vector<double> wvals(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) wvals[i] = real_vals[i] * w[i];
    std::vector<double> speed(f.size(), 1.0);
    if (arc.graph)
        for (std::size_t i = 0; i < f.size(); ++i)
            speed[i] = std::sqrt(1.0 + arc.graph->hp[i] * arc.graph->hp[i]);

    for (int i = 0; i < m; ++i) {
        const double q = p0 + dq * i;
        const double trap = (i == 0 || i == m - 1) ? 0.5 : 1.0;
        double fv = interp_uniform_cubic<double>(std::span<const double>(wvals), p0, hp, q);
        if (clamp && fv < 0.0) fv = 0.0;
        r.amp[i] = fv * dq * trap;
        if (arc.graph) {
            const auto& spec = arc.graph->spec;
            r.pos[i] = {q, spec.h(q)};
            const double sp = std::sqrt(1.0 + spec.hp(q) * spec.hp(q));
            r.val_arc[i] = fv / sp;  // density w.r.t. arclength
            r.s[i] = interp_uniform_cubic<double>(
                std::span<const double>(arc.graph->s_of_y), p0, hp, q);
            r.kappa[i] = spec.hpp(q) / (sp * sp * sp);
        } else {
            r.pos[i] = {interp_uniform_cubic<double>(std::span<const double>(gx), p0, hp, q),
                        interp_uniform_cubic<double>(std::span<const double>(gy), p0, hp, q)};
            r.val_arc[i] = fv;
            r.s[i] = q;
            r.kappa[i] =
                interp_uniform_cubic<double>(std::span<const double>(arc.kappa), p0, hp, q);
        }
    }
    return r;
}

void require_real(const ArcFunction& f, const char* who) {
    for (const cplx& v : f.values)
        if (v.imag() != 0.0) throw std::invalid_argument(std::string(who) + ": requires real input");
}

void require_nonneg(const ArcFunction& f, const char* who) {
    for (const cplx& v : f.values)
        if (v.imag() != 0.0 || v.real() < 0.0)
            throw std::invalid_argument(std::string(who) + ": requires nonnegative input");
}

inline void cic_deposit(RealField& field, double u, double v, double mass, bool& lost) {
    const PlaneGrid& g = field.grid;
    const double fx = (u - g.x_min) / g.dx();
    const double fy = (v - g.t_min) / g.dt();
    const int i0 = static_cast<int>(std::floor(fx));
    const int j0 = static_cast<int>(std::floor(fy));
    if (i0 < 0 || j0 < 0 || i0 + 1 >= g.nx || j0 + 1 >= g.nt) {
        lost = true;
        return;
    }
    const double wx = fx - i0, wy = fy - j0;
    field.values[g.index(i0, j0)] += mass * (1 - wx) * (1 - wy);
    field.values[g.index(i0 + 1, j0)] += mass * wx * (1 - wy);
    field.values[g.index(i0, j0 + 1)] += mass * (1 - wx) * wy;
    field.values[g.index(i0 + 1, j0 + 1)] += mass * wx * wy;
}

}  // namespace

PlaneGrid sum_grid(const ConvexArc& arc, int copies, int n, double pad) {
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    bool first = true;
    for (std::size_t i = 0; i < arc.size(); ++i) {
        const Vec2 g = arc.gamma_at_param(i);
        if (first) {
            x_lo = x_hi = g.x;
            y_lo = y_hi = g.y;
            first = false;
        }
        x_lo = std::min(x_lo, g.x);
        x_hi = std::max(x_hi, g.x);
        y_lo = std::min(y_lo, g.y);
        y_hi = std::max(y_hi, g.y);
    }
    PlaneGrid grid;
    const double span = std::max({x_hi - x_lo, y_hi - y_lo, 1e-9});
    const double margin = pad * copies * span;
    grid.x_min = copies * x_lo - margin;
    grid.x_max = copies * x_hi + margin;
    grid.t_min = copies * y_lo - margin;
    grid.t_max = copies * y_hi + margin;
    grid.nx = grid.nt = n;
    grid.validate();
    return grid;
}

RealField pair_convolution_density(const ArcFunction& f, const ArcFunction& g,
                                   const PlaneGrid& grid, int samples) {
    if (f.arc != g.arc) throw std::invalid_argument("pair_convolution_density: different arcs");
    require_real(f, "pair_convolution_density");
    require_real(g, "pair_convolution_density");
    grid.validate();
    const int m = samples > 0 ? samples : 512;
    const Resampled rf = resample(f, m);
    const Resampled rg = resample(g, m);

    RealField out;
    out.grid = grid;
    out.values.assign(grid.count(), 0.0);
    bool lost = false;
    for (int i = 0; i < m; ++i) {
        if (rf.amp[i] == 0.0) continue;
        for (int j = 0; j < m; ++j) {
            const double mass = rf.amp[i] * rg.amp[j];
            if (mass == 0.0) continue;
            cic_deposit(out, rf.pos[i].x + rg.pos[j].x, rf.pos[i].y + rg.pos[j].y, mass, lost);
        }
    }
    if (lost)
        throw std::invalid_argument("pair_convolution_density: grid does not cover Gamma+Gamma");
    const double inv_area = 1.0 / out.cell_area();
    for (double& v : out.values) v *= inv_area;
    return out;
}

RealField triple_autoconvolution_field(const ArcFunction& f, const TripleConvControl& ctrl) {
    require_real(f, "triple_autoconvolution_field");
    ArcFunction fa = f;
    for (cplx& v : fa.values) v = std::abs(v.real());
    const int m = ctrl.samples;
    const Resampled r = resample(fa, m, /*clamp=*/true);
    RealField out;
    out.grid = sum_grid(*f.arc, 3, ctrl.grid_n, ctrl.pad);
    out.values.assign(out.grid.count(), 0.0);
    bool lost = false;
    for (int i = 0; i < m; ++i) {
        if (r.amp[i] == 0.0) continue;
        for (int j = 0; j < m; ++j) {
            const double mij = r.amp[i] * r.amp[j];
            if (mij == 0.0) continue;
            const double ux = r.pos[i].x + r.pos[j].x, uy = r.pos[i].y + r.pos[j].y;
            for (int k = 0; k < m; ++k) {
                const double mass = mij * r.amp[k];
                if (mass == 0.0) continue;
                cic_deposit(out, ux + r.pos[k].x, uy + r.pos[k].y, mass, lost);
            }
        }
    }
    if (lost)
        throw std::runtime_error("triple_autoconvolution_field: grid covering failure");
    const double inv_area = 1.0 / out.cell_area();
    for (double& v : out.values) v *= inv_area;
    return out;
}

double l32_norm_pair(const ArcFunction& f, const ArcFunction& g, const L32Control& ctrl) {
    if (f.arc != g.arc) throw std::invalid_argument("l32_norm_pair: different arcs");
    require_nonneg(f, "l32_norm_pair");
    require_nonneg(g, "l32_norm_pair");
    const ConvexArc& arc = *f.arc;
    const int m = ctrl.samples;
    const Resampled rf = resample(f, m, /*clamp=*/true);
    const Resampled rg = resample(g, m, /*clamp=*/true);
    const double ds = rf.s[1] - rf.s[0];

    // support gap in arclength
    int f_lo = -1, f_hi = -1, g_lo = -1, g_hi = -1;
    for (int i = 0; i < m; ++i) {
        if (rf.val_arc[i] > 0) {
            if (f_lo < 0) f_lo = i;
            f_hi = i;
        }
        if (rg.val_arc[i] > 0) {
            if (g_lo < 0) g_lo = i;
            g_hi = i;
        }
    }
    if (f_lo < 0 || g_lo < 0) return 0.0;
    double gap = 0.0;
    if (f_hi < g_lo) gap = rg.s[g_lo] - rf.s[f_hi];
    if (g_hi < f_lo) gap = rf.s[f_lo] - rg.s[g_hi];

    if (gap > ctrl.separation_cells * ds) {
        // single branch: ∬ (f g)^{3/2} J^{-1/2} ds ds'
        std::vector<double> thf(m), thg(m);
        for (int i = 0; i < m; ++i) {
            const double q = arc.param_of_s(rf.s[i]);
            if (arc.graph)
                thf[i] = std::atan(arc.graph->spec.hp(q));
            else
                thf[i] = interp_uniform_cubic<double>(std::span<const double>(arc.theta),
                                                      arc.s.front(), arc.grid_step(), rf.s[i]);
            thg[i] = thf[i];
        }
        const auto swf = simpson_weights(m, ds);
        std::vector<double> rows(m, 0.0);
        for (int i = f_lo; i <= f_hi; ++i) {
            if (rf.val_arc[i] == 0.0) continue;
            double acc = 0.0;
            for (int j = g_lo; j <= g_hi; ++j) {
                if (rg.val_arc[j] == 0.0) continue;
                const double J = std::abs(std::sin(thf[i] - thg[j]));
                acc += std::pow(rf.val_arc[i] * rg.val_arc[j], 1.5) / std::sqrt(J) * swf[j];
            }
            rows[i] = acc * swf[i];
        }
        return std::pow(pairwise_sum(rows), 2.0 / 3.0);
    }

    if (!ctrl.enable_band)
        throw std::invalid_argument("l32_norm_pair: overlapping supports with band model disabled");

    // deposited route, diagonal band excluded and added in closed form
    const double h_band = ctrl.band_factor * ds;
    PlaneGrid grid = sum_grid(arc, 2, ctrl.grid_n, ctrl.pad);
    RealField dens;
    dens.grid = grid;
    dens.values.assign(grid.count(), 0.0);
    bool lost = false;
    for (int i = 0; i < m; ++i) {
        if (rf.amp[i] == 0.0) continue;
        for (int j = 0; j < m; ++j) {
            if (std::abs(rf.s[i] - rg.s[j]) < h_band) continue;
            const double mass = rf.amp[i] * rg.amp[j];
            if (mass == 0.0) continue;
            cic_deposit(dens, rf.pos[i].x + rg.pos[j].x, rf.pos[i].y + rg.pos[j].y, mass, lost);
        }
    }
    if (lost) throw std::runtime_error("l32_norm_pair: grid covering failure");
    const double inv_area = 1.0 / dens.cell_area();
    for (double& v : dens.values) v *= inv_area;

    std::vector<double> terms(dens.values.size());
    for (std::size_t i = 0; i < dens.values.size(); ++i)
        terms[i] = std::pow(dens.values[i], 1.5);
    const double off_band = pairwise_sum(terms) * dens.cell_area();

    // band: ∫ (f(m)g(m) + f(m)g(m))^{3/2} * 2 sqrt(h_band / kappa(m)) dm
    const auto sw = simpson_weights(m, ds);
    std::vector<double> band_terms(m, 0.0);
    for (int i = 0; i < m; ++i) {
        const double fg = rf.val_arc[i] * rg.val_arc[i] + rg.val_arc[i] * rf.val_arc[i];
        if (fg <= 0.0) continue;
        band_terms[i] = std::pow(fg, 1.5) * 2.0 * std::sqrt(h_band / rf.kappa[i]) * sw[i];
    }
    const double band = pairwise_sum(band_terms);
    return std::pow(off_band + band, 2.0 / 3.0);
}

double bilinear_form(const std::vector<double>& F, const std::vector<double>& G, double h,
                     double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("bilinear_form: alpha must lie in (0,1)");
    if (F.size() != G.size() || F.size() < 2)
        throw std::invalid_argument("bilinear_form: need matching grids with >= 2 samples");
    const int nc = static_cast<int>(F.size()) - 1;  // cells
    // cell averages
    std::vector<double> Fa(nc), Ga(nc);
    for (int k = 0; k < nc; ++k) {
        Fa[k] = 0.5 * (F[k] + F[k + 1]);
        Ga[k] = 0.5 * (G[k] + G[k + 1]);
    }
    // Phi(tau) = |tau|^{2-alpha} / ((1-alpha)(2-alpha)); cell-pair weight
    // W(m) = Phi((m+1)h) + Phi((m-1)h) - 2 Phi(mh) for cell offset m
    std::vector<double> Phi(nc + 2);
    const double c = 1.0 / ((1.0 - alpha) * (2.0 - alpha));
    for (int t = 0; t <= nc + 1; ++t) Phi[t] = c * std::pow(t * h, 2.0 - alpha);
    std::vector<double> W(nc);
    for (int mcell = 0; mcell < nc; ++mcell) {
        const int mm = std::abs(mcell);
        W[mcell] = Phi[mm + 1] + (mm >= 1 ? Phi[mm - 1] : Phi[1]) - 2.0 * Phi[mm];
    }
    std::vector<double> rows(nc, 0.0);
    for (int k = 0; k < nc; ++k) {
        if (Fa[k] == 0.0) continue;
        double acc = 0.0;
        for (int l = 0; l < nc; ++l) acc += Ga[l] * W[std::abs(k - l)];
        rows[k] = Fa[k] * acc;
    }
    return pairwise_sum(rows);
}

double cap_interaction(const ConvexArc& arc, const Cap& c1, const Cap& c2,
                       const L32Control& ctrl) {
    std::vector<cplx> ones(arc.param_grid().size(), cplx{1.0, 0.0});
    ArcFunction chi1 = restrict_to_cap(make_arc_function(arc, MeasureKind::Arclength, ones), c1);
    ArcFunction chi2 = restrict_to_cap(make_arc_function(arc, MeasureKind::Arclength, ones), c2);
    chi1.nonneg = chi2.nonneg = true;
    return l32_norm_pair(chi1, chi2, ctrl);
}

double CapFrame::g_second(double v) const {
    const std::size_t i = g.locate(v);
    const double t = (v - g.x[i]) / (g.x[i + 1] - g.x[i]);
    const double kap = kappa_of_v[i] * (1.0 - t) + kappa_of_v[i + 1] * t;
    const double gp = g_prime(v);
    return kap * std::pow(1.0 + gp * gp, 1.5);
}

CapFrame build_cap_frame(const ConvexArc& arc, const Cap& cap, int local_nodes) {
    if (cap.radius <= 0.0) throw std::invalid_argument("build_cap_frame: radius must be positive");
    const double window = 4.0 * cap.radius;
    const double s_lo = cap.center - window, s_hi = cap.center + window;
    if (s_lo < 0.0 || s_hi > arc.length)
        throw std::invalid_argument(
            "build_cap_frame: cap window leaves the arc (cap too close to an endpoint)");
    int n = local_nodes;
    if (n % 2 == 0) ++n;

    // tangent angle at local nodes
    std::vector<double> th(n), kp(n);
    const double hloc = (s_hi - s_lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double s = s_lo + hloc * i;
        if (arc.graph) {
            const double y = arc.param_of_s(s);
            th[i] = std::atan(arc.graph->spec.hp(y));
            const double hp = arc.graph->spec.hp(y);
            kp[i] = arc.graph->spec.hpp(y) / std::pow(1.0 + hp * hp, 1.5);
        } else {
            th[i] = interp_uniform_cubic<double>(std::span<const double>(arc.theta), arc.s.front(),
                                                 arc.grid_step(), s);
            kp[i] = interp_uniform_cubic<double>(std::span<const double>(arc.kappa), arc.s.front(),
                                                 arc.grid_step(), s);
        }
    }
    const int ic = (n - 1) / 2;  // center node
    const double theta_c = th[ic];
    std::vector<double> cs(n), sn(n);
    for (int i = 0; i < n; ++i) {
        cs[i] = std::cos(th[i] - theta_c);
        sn[i] = std::sin(th[i] - theta_c);
        if (cs[i] <= 0.0)
            throw std::invalid_argument("build_cap_frame: cap window turns beyond pi/2");
    }
    auto X = cumulative_integral_uniform(std::span<const double>(cs), hloc);
    auto Y = cumulative_integral_uniform(std::span<const double>(sn), hloc);
    const double xc = X[ic], yc = Y[ic];
    CapFrame fr;
    fr.kappa_c = kp[ic];
    fr.g.x.resize(n);
    fr.g.y.resize(n);
    fr.g.dy.resize(n);
    fr.kappa_of_v.resize(n);
    for (int i = 0; i < n; ++i) {
        fr.g.x[i] = X[i] - xc;
        fr.g.y[i] = Y[i] - yc;
        fr.g.dy[i] = std::tan(th[i] - theta_c);
        fr.kappa_of_v[i] = kp[i];
    }
    fr.v_table_lo = fr.g.x.front();
    fr.v_table_hi = fr.g.x.back();
    // graph extent of the cap itself (hard cutoff at the cap ends)
    const int cap_cells = static_cast<int>(std::floor(cap.radius / hloc));
    fr.v_lo = fr.g.x[std::max(0, ic - cap_cells)];
    fr.v_hi = fr.g.x[std::min(n - 1, ic + cap_cells)];
    return fr;
}

namespace {

struct ThetaGeometry {
    double ca, cb, cc;  // d/d rho of the three graph arguments
};

inline ThetaGeometry theta_geometry(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {-(c / std::sqrt(2.0) + s / std::sqrt(6.0)), (c / std::sqrt(2.0) - s / std::sqrt(6.0)),
            2.0 * s / std::sqrt(6.0)};
}

}  // namespace

double triple_autoconv_density(const CapFrame& fr, double xi, double tau, int theta_nodes) {
    const double xi3 = xi / 3.0;
    if (!fr.inside_table(xi3)) return 0.0;
    const double u = tau - fr.kappa_c / 6.0 * xi * xi - 3.0 * fr.phi(xi3);
    if (u < 0.0) return 0.0;

    const double rho_max = 0.45 * (fr.v_table_hi - fr.v_table_lo);
    double acc = 0.0;
    for (int k = 0; k < theta_nodes; ++k) {
        const double theta = 2.0 * kPi * k / theta_nodes;
        const ThetaGeometry tg = theta_geometry(theta);
        auto arg_ok = [&](double rho, double& a, double& b, double& c) {
            a = xi3 + tg.ca * rho;
            b = xi3 + tg.cb * rho;
            c = xi3 + tg.cc * rho;
            return fr.inside_table(a) && fr.inside_table(b) && fr.inside_table(c);
        };
        double a, b, c;
        double weight;
        if (u == 0.0) {
            weight = 1.0 / fr.g_second(xi3);
            a = b = c = xi3;
        } else {
            auto psi = [&](double rho) -> double {
                double aa, bb, cc2;
                if (!arg_ok(rho, aa, bb, cc2)) return std::numeric_limits<double>::infinity();
                return 0.5 * fr.kappa_c * rho * rho - 3.0 * fr.phi(xi3) + fr.phi(aa) + fr.phi(bb) +
                       fr.phi(cc2);
            };
            auto dpsi = [&](double rho) -> double {
                double aa, bb, cc2;
                arg_ok(rho, aa, bb, cc2);
                return fr.kappa_c * rho + fr.phi_prime(aa) * tg.ca + fr.phi_prime(bb) * tg.cb +
                       fr.phi_prime(cc2) * tg.cc;
            };
            // shrink the bracket to the part of [0, rho_max] with valid arguments
            double hi = rho_max;
            {
                double aa, bb, cc2;
                while (hi > 1e-14 && !arg_ok(hi, aa, bb, cc2)) hi *= 0.9;
            }
            if (psi(hi) < u) continue;  // delta line exits the window; factors vanish there
            double rho_star;
            try {
                rho_star = newton_bisection([&](double r) { return psi(r) - u; }, dpsi, 0.0, hi,
                                            std::sqrt(2.0 * u / fr.kappa_c), 1e-13 * (1.0 + u), 50);
            } catch (const std::exception& e) {
                throw std::runtime_error("triple_autoconv_density: delta inversion failed at xi=" +
                                         std::to_string(xi) + " tau=" + std::to_string(tau) +
                                         " theta=" + std::to_string(theta) + ": " + e.what());
            }
            arg_ok(rho_star, a, b, c);
            const double dp = dpsi(rho_star);
            weight = dp > 0.0 ? rho_star / dp : 1.0 / fr.g_second(xi3);
        }
        if (!(fr.inside_cap(a) && fr.inside_cap(b) && fr.inside_cap(c))) continue;
        const double ga = fr.g_prime(a), gb = fr.g_prime(b), gc = fr.g_prime(c);
        const double G3 = std::sqrt((1.0 + ga * ga) * (1.0 + gb * gb) * (1.0 + gc * gc));
        acc += G3 * weight;
    }
    return acc * (2.0 * kPi / theta_nodes) / std::sqrt(3.0);
}

double triple_autoconv_density(const ConvexArc& arc, const Cap& cap, double xi, double tau,
                               int theta_nodes) {
    const CapFrame fr = build_cap_frame(arc, cap);
    return triple_autoconv_density(fr, xi, tau, theta_nodes);
}

SupLimitResult triple_autoconv_sup_limit(const ConvexArc& arc, double s_center,
                                         const std::vector<double>& radii,
                                         const SupLimitControl& ctrl) {
    if (radii.size() < 3)
        throw std::invalid_argument("triple_autoconv_sup_limit: need at least 3 radii");
    SupLimitResult res;
    res.radii = radii;
    for (double r : radii) {
        const CapFrame fr = build_cap_frame(arc, Cap{s_center, r});
        const double v_max = std::min(-fr.v_lo, fr.v_hi);
        const double u_max = 0.5 * fr.kappa_c * std::pow(2.5 * v_max, 2);
        double sup = 0.0;
        for (int i = 0; i < ctrl.probe_xi; ++i) {
            const double xi =
                -3.0 * 0.98 * v_max + 2.0 * 3.0 * 0.98 * v_max * i / (ctrl.probe_xi - 1);
            const double base = fr.kappa_c / 6.0 * xi * xi + 3.0 * fr.phi(xi / 3.0);
            for (int j = 0; j < ctrl.probe_u; ++j) {
                const double u = u_max * j / (ctrl.probe_u - 1);
                const double val =
                    triple_autoconv_density(fr, xi, base + u, ctrl.theta_nodes);
                sup = std::max(sup, val);
            }
        }
        res.sup_values.push_back(sup);
    }
    // linear extrapolation sup(r) = L + m r (least squares)
    double s1 = 0, sr = 0, srr = 0, sv = 0, srv = 0;
    const int n = static_cast<int>(radii.size());
    for (int i = 0; i < n; ++i) {
        s1 += 1;
        sr += radii[i];
        srr += radii[i] * radii[i];
        sv += res.sup_values[i];
        srv += radii[i] * res.sup_values[i];
    }
    const double det = s1 * srr - sr * sr;
    res.limit = (sv * srr - srv * sr) / det;
    res.implied_norm = std::pow(4.0 * kPi * kPi * res.limit, 1.0 / 6.0);
    // warn when the sup sequence changes direction beyond tolerance
    double vmax = 0.0;
    for (double v : res.sup_values) vmax = std::max(vmax, std::abs(v));
    const double tol = 0.02 * vmax;
    bool up = false, down = false;
    for (int i = 0; i + 1 < n; ++i) {
        const double d = res.sup_values[i + 1] - res.sup_values[i];
        if (d > tol) up = true;
        if (d < -tol) down = true;
    }
    res.monotone_warning = up && down;
    return res;
}

}  // namespace frext
