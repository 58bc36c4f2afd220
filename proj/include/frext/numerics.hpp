// numerics.hpp
//
// Quadrature rules, stable summation, table interpolation and safeguarded
// root finding shared by the rest of the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace frext {

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Summation
// ---------------------------------------------------------------------------

// Pairwise (tree) summation. Fixed association order: results do not depend
// on thread counts as long as the input buffer is filled deterministically.
template <typename T>
T pairwise_sum(std::span<const T> v) {
    if (v.empty()) return T{};
    if (v.size() <= 8) {
        T acc = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) acc += v[i];
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(std::span<const T>(v.data(), v.size()));
}

// ---------------------------------------------------------------------------
// Composite Simpson on a uniform grid
// ---------------------------------------------------------------------------

// Weights for n samples spaced h apart. Even interval counts use plain
// composite Simpson; odd interval counts splice in a 3/8 rule at the end so
// the O(h^4) order is kept for any n >= 4.
inline std::vector<double> simpson_weights(std::size_t n, double h) {
    if (n < 2) throw std::invalid_argument("simpson_weights: need n >= 2");
    std::vector<double> w(n, 0.0);
    if (n == 2) {
        w[0] = w[1] = h / 2.0;
        return w;
    }
    std::size_t intervals = n - 1;
    std::size_t simpson_end = intervals;  // index of last node covered by Simpson part
    if (intervals % 2 != 0) {
        if (n < 4) throw std::invalid_argument("simpson_weights: odd interval count needs n >= 4");
        simpson_end = intervals - 3;
    }
    for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
    }
    if (simpson_end != intervals) {
        const double c = 3.0 * h / 8.0;
        w[simpson_end] += c;
        w[simpson_end + 1] += 3.0 * c;
        w[simpson_end + 2] += 3.0 * c;
        w[simpson_end + 3] += c;
    }
    return w;
}

template <typename T>
T integrate_uniform(std::span<const T> f, double h) {
    const auto w = simpson_weights(f.size(), h);
    std::vector<T> terms(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) terms[i] = f[i] * w[i];
    return pairwise_sum(std::span<const T>(terms.data(), terms.size()));
}

// Cumulative integral on a uniform grid, O(h^4): each cell is integrated with
// the cubic through its four nearest samples.
inline std::vector<double> cumulative_integral_uniform(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    std::vector<double> F(n, 0.0);
    if (n < 2) return F;
    if (n < 4) {
        for (std::size_t i = 1; i < n; ++i) F[i] = F[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
        return F;
    }
    const double c = h / 24.0;
    F[1] = F[0] + c * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
    for (std::size_t i = 1; i + 2 < n; ++i)
        F[i + 1] = F[i] + c * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]);
    F[n - 1] = F[n - 2] + c * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]);
    return F;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre panels
// ---------------------------------------------------------------------------

struct GaussLegendre8 {
    static constexpr int n = 8;
    static constexpr double node[8] = {
        -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
        0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
    static constexpr double weight[8] = {
        0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
        0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
};

// Nodes/weights for [a,b] split into `panels` GL8 panels, appended to the
// given vectors.
inline void gl8_panels(double a, double b, int panels,
                       std::vector<double>& nodes, std::vector<double>& weights) {
    const double dz = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * dz;
        const double mid = lo + 0.5 * dz;
        for (int k = 0; k < GaussLegendre8::n; ++k) {
            nodes.push_back(mid + 0.5 * dz * GaussLegendre8::node[k]);
            weights.push_back(0.5 * dz * GaussLegendre8::weight[k]);
        }
    }
}

// Adaptive GL8 integration by panel bisection.
double gl_adaptive(const std::function<double(double)>& f, double a, double b,
                   double rel_tol, double abs_tol = 0.0, int max_depth = 24);

// ---------------------------------------------------------------------------
// Monotone table interpolation (cubic Hermite with supplied slopes)
// ---------------------------------------------------------------------------

struct HermiteTable {
    std::vector<double> x;   // strictly increasing
    std::vector<double> y;
    std::vector<double> dy;  // dy/dx at the nodes

    double eval(double xq) const;
    double deriv(double xq) const;
    // index of the cell containing xq (clamped)
    std::size_t locate(double xq) const;
};

// Cubic Lagrange interpolation on a uniform grid (4-point stencil, O(h^4)).
template <typename T>
T interp_uniform_cubic(std::span<const T> f, double x0, double h, double xq) {
    const std::size_t n = f.size();
    if (n < 4) {
        // linear fallback
        double u = (xq - x0) / h;
        long i = std::clamp<long>(static_cast<long>(std::floor(u)), 0, static_cast<long>(n) - 2);
        double t = u - i;
        return f[i] * (1.0 - t) + f[i + 1] * t;
    }
    double u = (xq - x0) / h;
    long i = static_cast<long>(std::floor(u));
    i = std::clamp<long>(i, 1, static_cast<long>(n) - 3);
    const double t = u - i;
    const T fm1 = f[i - 1], f0 = f[i], f1 = f[i + 1], f2 = f[i + 2];
    const double tm = t - 1.0, tp = t + 1.0, t2 = t - 2.0;
    return fm1 * (-t * tm * t2 / 6.0) + f0 * (tp * tm * t2 / 2.0) +
           f1 * (-tp * t * t2 / 2.0) + f2 * (tp * t * tm / 6.0);
}

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

// Newton with a bisection safeguard on a bracket [lo, hi] where f is
// increasing and f(lo) <= 0 <= f(hi). Returns the root; throws on
// non-convergence.
double newton_bisection(const std::function<double(double)>& f,
                        const std::function<double(double)>& df,
                        double lo, double hi, double x0,
                        double tol, int max_iter = 50);

}  // namespace frext
