// variational.hpp
//
// The second-variation program at the Gaussian extremizer on a perturbed
// parabola: the quadratic form Q, the trial family f_eps, Xi(eps), the
// closed-form Xi''(0), the explicit two-dimensional integrals behind it, and
// the strict comparison of optimal constants.

#pragma once

#include <optional>
#include <vector>

#include "frext/extension.hpp"
#include "frext/fields.hpp"
#include "frext/search.hpp"

namespace frext {

struct PerturbedParabola {
    double lambda = 1.0;
    double a = 0.125;
    std::vector<double> psi;  // coefficients of y^5, y^6, ...
    double halfwidth = 0.0;   // interval I half-length; 0 = largest with |h'| <= 1
    double mollifier_margin = 0.0;  // measure taper width; 0 = halfwidth / 4 (= |I|/8)
    bool enforce_condition_a = true;

    void validate() const;
    double h(double y) const;
    double hp(double y) const;
    double hpp(double y) const;
    CurveSpec to_spec() const;
    // arc over [-(halfwidth+margin), +] with the mollified arclength measure
    ConvexArc build_arc(int n = 4097) const;
};

// Finalizes defaulted fields (halfwidth, margin) and validates.
PerturbedParabola make_perturbed_parabola(double lambda, double a,
                                          std::vector<double> psi = {},
                                          double halfwidth = 0.0);

// ---------------------------------------------------------------------------
// Gaussian-polynomial mixtures with closed-form parabola-frame transforms
// ---------------------------------------------------------------------------

// phi(y) = sum_k coef_k y^{power_k} e^{-gauss_a_k (y - center_k)^2} e^{i osc_k y}
struct GaussPolyTerm {
    cplx coef{1.0, 0.0};
    int power = 0;
    double gauss_a = 0.5;
    double center = 0.0;
    double osc = 0.0;
};

struct GaussPoly {
    std::vector<GaussPolyTerm> terms;

    cplx eval(double y) const;
    // phi_1(x,t) = ∫ phi(y) e^{-i t lambda y^2/2} e^{+i x y} dy (closed form)
    cplx transform(double lambda, double x, double t) const;
    // ∫ phi(y) conj(psi(y)) dy (closed form)
    static cplx inner(const GaussPoly& phi, const GaussPoly& psi);
};

// the six symmetry directions y^k G0, i y^k G0 (k = 0,1,2) for G0 = e^{-lambda y^2/2}
GaussPoly kernel_element(int k, bool imaginary, double lambda);
// the paper's phi = c_lambda u e^{-lambda u^2/2}
GaussPoly normalized_odd_gaussian(double lambda);

struct QControl {
    int zeta_panels = 48;   // GL8 panels over the full (-pi/2, pi/2)
    double w_max = 8.5;
    int w_panels = 24;
    int threads = 0;
    // sampled-path controls
    double points_per_cycle = 16.0;
    int min_y_points = 3001;
    double t_truncation = 300.0;
};

// Q(phi) via closed-form transforms.
double quadratic_form_Q(const GaussPoly& phi, double lambda, const QControl& ctrl = {});
// Q(phi) for a sampled phi on a uniform y grid (generic quadrature path).
double quadratic_form_Q_sampled(const std::vector<cplx>& phi, double y0, double dy, double lambda,
                                const QControl& ctrl = {});
// natural scale 3 C_F^6 ||G0||^4 ||phi||^2 used to normalize Q tolerances
double q_natural_scale(double lambda, double phi_l2sq);

// ---------------------------------------------------------------------------
// Trial family and Xi
// ---------------------------------------------------------------------------

struct TrialCutoff {
    double flat = 0.0;   // eta = 1 for |u| <= flat   (u = y / eps)
    double taper = 0.0;  // quintic smoothstep down to 0 at flat + taper
};

// Cutoff of the trial family in rescaled units. Follows the paper's
// halfwidth * log(1/eps) flat region, lifted to at least 4.5 Gaussian widths
// whenever the interval I has room; support always stays inside I.
TrialCutoff trial_cutoff(const PerturbedParabola& pp, double eps);

// f_eps sampled on the arc's y grid (arclength measure).
ArcFunction trial_function(const PerturbedParabola& pp, double eps, const ConvexArc& arc);

struct XiResult {
    double xi = 0.0;
    double l2_term = 0.0;  // C_F^6 ||f_eps||^6
    double l6_term = 0.0;  // ||f_eps sigma-tilde hat||_6^6
    double l6_error = 0.0; // tail-fit error estimate on the L6 term
    double l2_norm_sq = 0.0;
};

struct XiControl {
    std::array<double, 3> radii{30.0, 60.0, 120.0};
    int zeta_panels_head = 24;
    int zeta_panels_mid = 6;
    int zeta_panels_tail = 6;
    double w_max = 8.0;
    int w_panels = 20;
    double points_per_cycle = 16.0;
    int min_u_points = 3001;
    int threads = 0;
};

// Xi(eps) = C_F[lambda]^6 ||f_eps||_{L2(sigma~)}^6 - ||f_eps sigma~ hat||_6^6,
// evaluated in the rescaled frame (exact reparametrization).
XiResult xi(const PerturbedParabola& pp, double eps, const XiControl& ctrl = {});

// closed form 8 pi^{3/2} lambda^{-7/2} C_F[lambda]^6 (a - 3 lambda^3 / 16)
double xi_second_derivative(const PerturbedParabola& pp);

// ---------------------------------------------------------------------------
// Explicit integrals
// ---------------------------------------------------------------------------

struct ValuePair {
    double numeric = 0.0;
    double closed_form = 0.0;
    double rel_error = 0.0;  // |numeric - closed| / max(|closed|, 1)
};

struct Appendix2Result {
    ValuePair I, II, III, claim1, claim2;
};

// The five explicit plane integrals built from the closed-form Gaussian
// extensions, each paired with its closed form.
Appendix2Result appendix2_integrals(double lambda, double a, const QControl& ctrl = {});

// ---------------------------------------------------------------------------
// Strict comparison of optimal constants
// ---------------------------------------------------------------------------

struct CompareResult {
    double lambda_ref = 0.0;    // curvature parameter used for C_F
    double lambda_min_arc = 0.0;
    double c_foschi = 0.0;
    double c_lower = 0.0;       // certified-by-evaluation lower bound on C[Gamma]
    double error_estimate = 0.0;
    double margin = 0.0;        // c_lower - c_foschi
    bool strict = false;        // margin > 3 * error_estimate
    double seed_rayleigh = 0.0;
};

struct CompareControl {
    double seed_eps = 0.15;     // trial-family seed (graph arcs)
    SearchParams search;        // iteration controls
    L6Control final_plane;      // high-resolution final evaluation
};

CompareControl default_compare_control(bool graph_arc);

CompareResult compare_constants(const ConvexArc& arc, const CompareControl& ctrl,
                                const PerturbedParabola* pp = nullptr);

}  // namespace frext
