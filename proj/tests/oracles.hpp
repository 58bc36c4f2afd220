// oracles.hpp
//
// Test-only reference computations, kept independent of the library's own
// quadrature/search paths: recursive adaptive Simpson in 1-D and 2-D, a
// brute-force cap-functional maximizer, and a Monte-Carlo pushforward
// binning oracle.

#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracles {

inline double simpson_panel(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_panel(f, a, m, fa, flm, fm);
    const double right = simpson_panel(f, m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int depth = 40) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = simpson_panel(f, a, b, fa, fm, fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

inline double adaptive_simpson_2d(const std::function<double(double, double)>& f, double ax,
                                  double bx, double ay, double by, double tol_inner = 1e-10,
                                  double tol_outer = 1e-9) {
    auto outer = [&](double x) {
        return adaptive_simpson([&](double y) { return f(x, y); }, ay, by, tol_inner);
    };
    return adaptive_simpson(outer, ax, bx, tol_outer);
}

// Monte-Carlo estimate of the triple-sum pushforward density at a planar
// point: the triple convolution of a measure with density w(s) ds on s in
// [lo, hi], evaluated by binning gamma(s1)+gamma(s2)+gamma(s3) into a small
// box around the target. Returns {density, standard_error}.
struct McDensity {
    double density = 0.0;
    double std_error = 0.0;
};

template <typename Gamma>
McDensity mc_triple_density(Gamma&& gamma, double lo, double hi, double target_x, double target_y,
                            double half_box, std::size_t n_triples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(lo, hi);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n_triples; ++i) {
        const auto p1 = gamma(uni(rng));
        const auto p2 = gamma(uni(rng));
        const auto p3 = gamma(uni(rng));
        const double sx = p1.x + p2.x + p3.x, sy = p1.y + p2.y + p3.y;
        if (std::abs(sx - target_x) <= half_box && std::abs(sy - target_y) <= half_box) ++hits;
    }
    const double total_mass = std::pow(hi - lo, 3);  // arclength^3
    const double box_area = 4.0 * half_box * half_box;
    const double p = static_cast<double>(hits) / n_triples;
    McDensity out;
    out.density = p * total_mass / box_area;
    out.std_error = std::sqrt(p * (1.0 - p) / n_triples) * total_mass / box_area;
    return out;
}

}  // namespace oracles
