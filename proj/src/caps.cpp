#include "frext/caps.hpp"

#include <cmath>
#include <stdexcept>

#include "frext/convolution.hpp"
#include "frext/numerics.hpp"

namespace frext {

double cap_distance(const Cap& a, const Cap& b) {
    if (a.radius <= 0.0 || b.radius <= 0.0)
        throw std::invalid_argument("cap_distance: radii must be positive");
    const double ds = a.center - b.center, dr = a.radius - b.radius;
    return std::acosh(1.0 + (ds * ds + dr * dr) / (2.0 * a.radius * b.radius));
}

CapFunctionalResult cap_functional_max(const ArcFunction& f) {
    f.validate();
    const ConvexArc& arc = *f.arc;
    const std::size_t n = f.size();
    const double hp = arc.param_step();
    const auto w = sigma_weights(arc, f.measure);

    // prefix sums of |f|^{3/2} w over the parameter grid (trapezoid cells)
    std::vector<double> dens(n);
    for (std::size_t i = 0; i < n; ++i) dens[i] = std::pow(std::abs(f.values[i]), 1.5) * w[i];
    std::vector<double> prefix(n, 0.0), prefix_w(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        prefix[i] = prefix[i - 1] + 0.5 * hp * (dens[i - 1] + dens[i]);
        prefix_w[i] = prefix_w[i - 1] + 0.5 * hp * (w[i - 1] + w[i]);
    }
    bool zero = prefix.back() == 0.0;
    if (zero) throw std::invalid_argument("cap_functional_max: zero function");

    // param index of arclength s (graph arcs need the inverse map)
    auto index_of_s = [&](double s) -> long {
        if (!arc.graph) return std::lround(s / hp);
        const double y = arc.param_of_s(s);
        return std::lround((y - arc.graph->y.front()) / hp);
    };

    const int k_max = std::max(1, static_cast<int>(
                                       std::floor(std::log2(arc.length / (4.0 * arc.grid_step())))));
    CapFunctionalResult best;
    best.value = -1.0;
    for (std::size_t ic = 0; ic < n; ++ic) {
        const double sc = arc.s_of_param(ic);
        for (int k = 0; k <= k_max; ++k) {
            const double r = arc.length * std::pow(2.0, -k);
            long lo = index_of_s(std::max(0.0, sc - r));
            long hi = index_of_s(std::min(arc.length, sc + r));
            lo = std::clamp<long>(lo, 0, static_cast<long>(n) - 1);
            hi = std::clamp<long>(hi, 0, static_cast<long>(n) - 1);
            if (hi <= lo) continue;
            const double mass = prefix[hi] - prefix[lo];
            const double meas = prefix_w[hi] - prefix_w[lo];
            if (meas <= 0.0) continue;
            const double val = mass * std::pow(meas, -0.25);
            if (val > best.value) {
                best.value = val;
                best.mass = mass;
                best.measure = meas;
                best.cap = Cap{sc, r};
            }
        }
    }
    return best;
}

SplitResult split(const ArcFunction& f) {
    f.validate();
    for (const cplx& v : f.values)
        if (v.imag() != 0.0 || v.real() < 0.0)
            throw std::invalid_argument("split: requires a nonnegative function");
    const double l2 = l2_sigma_norm(f);
    if (l2 == 0.0) throw std::invalid_argument("split: zero function");

    SplitResult out;
    const auto cf = cap_functional_max(f);
    out.cap = cf.cap;
    out.cap_mass = cf.mass;
    const double r_inv_sqrt = out.cap_mass / (2.0 * l2 * l2);
    out.threshold_R = 1.0 / (r_inv_sqrt * r_inv_sqrt);

    out.g = f;
    out.h = f;
    const ConvexArc& arc = *f.arc;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double s = arc.s_of_param(i);
        const bool in_cap = std::abs(s - cf.cap.center) < cf.cap.radius;
        const bool in_E = in_cap && f.values[i].real() <= out.threshold_R;
        if (in_E) {
            out.h.values[i] = 0.0;
        } else {
            out.g.values[i] = 0.0;
        }
    }
    return out;
}

Decomposition decompose(const ArcFunction& f, const DecomposeParams& params) {
    f.validate();
    for (const cplx& v : f.values)
        if (v.imag() != 0.0 || v.real() < 0.0)
            throw std::invalid_argument("decompose: requires a nonnegative function");
    if (params.c_estimate <= 0.0)
        throw std::invalid_argument("decompose: c_estimate must be positive");

    Decomposition out;
    out.input_l2 = l2_sigma_norm(f);
    out.residual = f;
    if (out.input_l2 == 0.0) return out;

    TripleConvControl tc;
    tc.samples = params.conv_samples;
    tc.grid_n = params.conv_grid;

    const double cpi = params.c_estimate * params.c_estimate * params.c_estimate / (2.0 * kPi);
    const double fl2_3 = out.input_l2 * out.input_l2 * out.input_l2;
    double eps = 0.5;
    ArcFunction G = f;
    for (int step = 0; step < params.max_steps; ++step) {
        const double gl2 = l2_sigma_norm(G);
        if (gl2 < params.residual_tol) break;
        const double tnorm = l2_norm_field(triple_autoconvolution_field(G, tc));
        if (tnorm <= 1e-14 * cpi * fl2_3) break;  // numerically zero: G vanishes
        while (tnorm < eps * eps * eps * cpi * fl2_3) eps *= 0.5;

        SplitResult sp = split(G);
        DecompStep st;
        st.part = sp.g;
        st.cap = sp.cap;
        st.eps_star = eps;
        st.l2_mass = l2_sigma_norm(sp.g);
        st.tnorm = tnorm;
        out.steps.push_back(std::move(st));
        G = sp.h;
    }
    out.residual = G;
    return out;
}

UpperProfile upper_profile(const ArcFunction& f, const Cap& cap,
                           const std::vector<double>& R_list) {
    f.validate();
    if (cap.radius <= 0.0) throw std::invalid_argument("upper_profile: invalid cap");
    UpperProfile up;
    up.cap = cap;
    up.R_values = R_list;
    const ConvexArc& arc = *f.arc;
    const auto w = sigma_weights(arc, f.measure);
    const auto sw = simpson_weights(f.size(), arc.param_step());
    const double r0 = cap.radius, s0 = cap.center;
    for (double R : R_list) {
        const double height_cut = R / std::sqrt(r0);
        double th = 0.0, ts = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double a2 = std::norm(f.values[i]);
            const double wq = w[i] * sw[i];
            if (std::abs(f.values[i]) >= height_cut) th += a2 * wq;
            if (std::abs(arc.s_of_param(i) - s0) >= R * r0) ts += a2 * wq;
        }
        up.tail_height.push_back(th);
        up.tail_space.push_back(ts);
    }
    return up;
}

ConcentrationReport concentration_metric(const std::vector<ArcFunction>& fs,
                                         const ConcentrationControl& ctrl) {
    if (fs.size() < 2)
        throw std::invalid_argument("concentration_metric: need at least 2 functions");
    const ConvexArc& arc = *fs.front().arc;
    for (const auto& f : fs)
        if (f.arc != &arc)
            throw std::invalid_argument("concentration_metric: functions on different arcs");

    std::vector<double> ladder = ctrl.radius_ladder;
    if (ladder.empty())
        for (int k = 3; k <= 7; ++k) ladder.push_back(arc.length * std::pow(2.0, -k));
    const double r_small = *std::min_element(ladder.begin(), ladder.end());

    ConcentrationReport rep;
    rep.lambda = arc.lambda_min;
    for (const auto& f : fs) {
        const double total = std::pow(l2_sigma_norm(f), 2);
        const auto w = sigma_weights(arc, f.measure);
        const auto sw = simpson_weights(f.size(), arc.param_step());
        double best = 0.0, best_center = 0.0;
        for (std::size_t ic = 0; ic < f.size(); ++ic) {
            const double sc = arc.s_of_param(ic);
            double mass = 0.0;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (std::abs(arc.s_of_param(i) - sc) < r_small)
                    mass += std::norm(f.values[i]) * w[i] * sw[i];
            if (mass > best) {
                best = mass;
                best_center = sc;
            }
        }
        rep.best_fraction.push_back(total > 0 ? best / total : 0.0);
        rep.best_center.push_back(best_center);
    }
    rep.concentrated = rep.best_fraction.back() > ctrl.threshold;
    rep.center = rep.best_center.back();
    rep.kappa_at_center = arc.kappa_at_s(rep.center);
    rep.kappa_equals_lambda =
        std::abs(rep.kappa_at_center - rep.lambda) <= ctrl.kappa_rel_tol * rep.lambda;
    return rep;
}

}  // namespace frext
