// caps.hpp
//
// The cap metric, the refined cap functional, the split lemma, the
// decomposition algorithm, and the upper-normalization / concentration
// diagnostics.

#pragma once

#include <vector>

#include "frext/fields.hpp"

namespace frext {

// Hyperbolic upper-half-plane distance between (center, radius) pairs.
double cap_distance(const Cap& a, const Cap& b);

struct CapFunctionalResult {
    Cap cap;
    double value = 0.0;    // |C|^{-1/4} ∫_C |f|^{3/2} d sigma
    double mass = 0.0;     // ∫_C |f|^{3/2} d sigma
    double measure = 0.0;  // |C|
};

// Maximizes |C|^{-1/4} ∫_C |f|^{3/2} d sigma over the cap lattice: centers at
// every grid sample, dyadic radii r_k = length * 2^{-k} down to ~4 grid steps.
CapFunctionalResult cap_functional_max(const ArcFunction& f);

struct SplitResult {
    ArcFunction g, h;
    Cap cap;
    double threshold_R = 0.0;
    double cap_mass = 0.0;  // m = ∫_C f^{3/2} d sigma
};

// f = g + h with g = f chi_{C ∩ {f <= R}}, R^{-1/2} = m / (2 ||f||_2^2).
// Guarantees ∫_C g^{3/2} >= m/2 and ||g||_2 >= |C|^{-1/6} (m/2)^{2/3}.
SplitResult split(const ArcFunction& f);

struct DecomposeParams {
    double c_estimate = 0.0;  // stand-in for the optimal constant; must be > 0
    int max_steps = 20;
    double residual_tol = 1e-3;  // stop when ||G_n||_2 falls below this
    int conv_samples = 256;      // triple-convolution deposition resolution
    int conv_grid = 384;
};

struct DecompStep {
    ArcFunction part;   // f_n
    Cap cap;
    double eps_star = 0.0;
    double l2_mass = 0.0;   // ||f_n||_2
    double tnorm = 0.0;     // ||G_n sigma * G_n sigma * G_n sigma||_2
};

struct Decomposition {
    std::vector<DecompStep> steps;
    ArcFunction residual;
    double input_l2 = 0.0;
};

Decomposition decompose(const ArcFunction& f, const DecomposeParams& params);

struct UpperProfile {
    Cap cap;
    std::vector<double> R_values;
    std::vector<double> tail_height;  // ∫_{f >= R r0^{-1/2}} f^2 d sigma
    std::vector<double> tail_space;   // ∫_{|s-s0| >= R r0} f^2 d sigma
};

UpperProfile upper_profile(const ArcFunction& f, const Cap& cap,
                           const std::vector<double>& R_list);

struct ConcentrationReport {
    // per function: best small-cap mass fraction at the smallest ladder radius
    std::vector<double> best_fraction;
    std::vector<double> best_center;
    bool concentrated = false;      // last function's fraction > threshold
    double center = 0.0;            // concentration point estimate (arclength)
    double kappa_at_center = 0.0;
    double lambda = 0.0;            // arc's min curvature
    bool kappa_equals_lambda = false;
};

struct ConcentrationControl {
    std::vector<double> radius_ladder;  // defaults to length * {1/8, ..., 1/128}
    double threshold = 0.9;
    double kappa_rel_tol = 1e-2;
};

ConcentrationReport concentration_metric(const std::vector<ArcFunction>& fs,
                                         const ConcentrationControl& ctrl = {});

}  // namespace frext
