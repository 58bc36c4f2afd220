// convolution.hpp
//
// Densities and norms of pair/triple convolutions of weighted arc measures,
// the bilinear form B_alpha, cap-interaction norms, and the exact
// triple-autoconvolution density with its r -> 0 limit.

#pragma once

#include <array>
#include <vector>

#include "frext/fields.hpp"
#include "frext/numerics.hpp"

namespace frext {

struct TripleConvControl {
    int grid_n = 512;   // deposit grid per axis
    int samples = 320;  // curve samples per convolution factor
    double pad = 0.04;  // bounding-box padding fraction
    int threads = 0;    // deposition itself is sequential; kept for interface symmetry
};

// Deposits the mass of f sigma * g sigma onto the grid (bilinear area
// weights), then divides by cell area. All (s,s') pairs contribute, both
// branches of the 2-to-1 sum map included. Rejects if the grid does not
// cover Gamma + Gamma.
RealField pair_convolution_density(const ArcFunction& f, const ArcFunction& g,
                                   const PlaneGrid& grid, int samples = 0);

// Grid covering the Minkowski sum of `copies` copies of the arc, padded.
PlaneGrid sum_grid(const ConvexArc& arc, int copies, int n, double pad);

// |f| sigma * |f| sigma * |f| sigma by deposition.
RealField triple_autoconvolution_field(const ArcFunction& f, const TripleConvControl& ctrl = {});

struct L32Control {
    int grid_n = 512;
    int samples = 512;          // resampled nodes for the deposited route
    double band_factor = 4.0;   // h_band = band_factor * sample step
    double separation_cells = 8.0;  // support gap (in grid steps) for the direct route
    bool enable_band = true;
    double pad = 0.04;
};

// || f sigma * g sigma ||_{3/2} for nonnegative f, g. Cap-separated supports
// integrate (fg)^{3/2} J^{-1/2} directly; overlapping supports integrate the
// deposited density with the diagonal band added in closed form via the
// local model J ~ kappa |s - s'|.
double l32_norm_pair(const ArcFunction& f, const ArcFunction& g, const L32Control& ctrl = {});

// B_alpha(F,G) = ∬ F(x) G(x') |x-x'|^{-alpha} dx dx' for samples on a common
// uniform grid of step h. Cell-pair weights are integrated in closed form.
double bilinear_form(const std::vector<double>& F, const std::vector<double>& G, double h,
                     double alpha);

// || chi_C sigma * chi_C' sigma ||_{3/2}
double cap_interaction(const ConvexArc& arc, const Cap& c1, const Cap& c2,
                       const L32Control& ctrl = {});

// ---------------------------------------------------------------------------
// Local cap frame and the exact triple-autoconvolution formula
// ---------------------------------------------------------------------------

// Rotated/translated graph coordinates of a cap: curve (v, g(v)) with
// g(0) = g'(0) = 0 and g''(0) = kappa at the cap center.
struct CapFrame {
    double kappa_c = 0.0;
    double v_lo = 0.0, v_hi = 0.0;      // graph extent of the cap (hard cutoff)
    double v_table_lo = 0.0, v_table_hi = 0.0;
    HermiteTable g;                      // g(v) with slopes
    std::vector<double> kappa_of_v;      // curvature at table nodes

    double g_val(double v) const { return g.eval(v); }
    double g_prime(double v) const { return g.deriv(v); }
    double g_second(double v) const;     // kappa(v) (1+g'^2)^{3/2}
    double phi(double v) const { return g_val(v) - 0.5 * kappa_c * v * v; }
    double phi_prime(double v) const { return g_prime(v) - kappa_c * v; }
    bool inside_cap(double v) const { return v > v_lo && v < v_hi; }
    bool inside_table(double v) const { return v >= v_table_lo && v <= v_table_hi; }
};

CapFrame build_cap_frame(const ConvexArc& arc, const Cap& cap, int local_nodes = 2049);

// sigma_{s,r}^{(*3)} (xi, tau) in the cap frame: theta integral of the
// delta-inverted polar formula; zero outside the support region.
double triple_autoconv_density(const CapFrame& frame, double xi, double tau, int theta_nodes = 64);
double triple_autoconv_density(const ConvexArc& arc, const Cap& cap, double xi, double tau,
                               int theta_nodes = 64);

struct SupLimitControl {
    int probe_xi = 41;
    int probe_u = 48;
    int theta_nodes = 64;
};

struct SupLimitResult {
    std::vector<double> radii;
    std::vector<double> sup_values;
    double limit = 0.0;         // linear-in-r extrapolation to r = 0
    double implied_norm = 0.0;  // ((2 pi)^2 limit)^{1/6}
    bool monotone_warning = false;
};

SupLimitResult triple_autoconv_sup_limit(const ConvexArc& arc, double s_center,
                                         const std::vector<double>& radii,
                                         const SupLimitControl& ctrl = {});

}  // namespace frext
