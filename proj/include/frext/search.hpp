// search.hpp
//
// Damped fixed-point ascent on the Rayleigh quotient over nonnegative
// functions: certified-by-evaluation lower bounds on the optimal constant,
// plus sequence diagnostics.

#pragma once

#include <vector>

#include "frext/caps.hpp"
#include "frext/extension.hpp"
#include "frext/fields.hpp"

namespace frext {

// One fixed-point step: F = f-hat sigma on the working grid; pulls back the
// adjoint applied to |F|^4 F; clamps to the nonnegative cone; blends with
// damping theta and renormalizes to ||f||_2 = 1.
ArcFunction ascent_step(const ArcFunction& f, double damping, const L6Control& ctrl = {});

struct SearchParams {
    int max_iters = 100;
    double damping0 = 1.0;
    double damping_floor = 1.0 / 64.0;
    double stall_tol = 1e-7;
    int stall_window = 5;
    L6Control plane;
};

struct TracePoint {
    int iter = 0;
    double rayleigh = 0.0;
    double l6_error = 0.0;
    double damping = 0.0;
};

struct SearchResult {
    ArcFunction best;
    double c_lower = 0.0;
    double error_estimate = 0.0;
    std::vector<TracePoint> trace;
};

SearchResult search(const ArcFunction& f0, const SearchParams& params);

struct DiagnosticsReport {
    bool concentrating = false;
    double point = 0.0;            // arclength of the concentration center
    double kappa_at_point = 0.0;
    double lambda = 0.0;
    bool kappa_equals_lambda = false;
    std::vector<double> fractions;  // per-iterate best small-cap mass fraction
    UpperProfile profile;           // of the last iterate, at the best cap
};

DiagnosticsReport sequence_diagnostics(const std::vector<ArcFunction>& iterates,
                                       const ConcentrationControl& ctrl = {});

}  // namespace frext
