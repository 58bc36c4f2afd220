#include "frext/numerics.hpp"

namespace frext {

namespace {

double gl8_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int k = 0; k < GaussLegendre8::n; ++k)
        acc += GaussLegendre8::weight[k] * f(mid + half * GaussLegendre8::node[k]);
    return acc * half;
}

double gl_adaptive_rec(const std::function<double(double)>& f, double a, double b,
                       double whole, double tol, int depth, int max_depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl8_panel(f, a, mid);
    const double right = gl8_panel(f, mid, b);
    const double delta = left + right - whole;
    if (depth >= max_depth || std::abs(delta) <= tol) return left + right;
    return gl_adaptive_rec(f, a, mid, left, tol / 2.0, depth + 1, max_depth) +
           gl_adaptive_rec(f, mid, b, right, tol / 2.0, depth + 1, max_depth);
}

}  // namespace

double gl_adaptive(const std::function<double(double)>& f, double a, double b,
                   double rel_tol, double abs_tol, int max_depth) {
    const double whole = gl8_panel(f, a, b);
    const double tol = std::max(abs_tol, rel_tol * std::abs(whole));
    return gl_adaptive_rec(f, a, b, whole, std::max(tol, 1e-300), 0, max_depth);
}

std::size_t HermiteTable::locate(double xq) const {
    auto it = std::upper_bound(x.begin(), x.end(), xq);
    std::size_t i = static_cast<std::size_t>(std::distance(x.begin(), it));
    if (i == 0) return 0;
    if (i >= x.size()) return x.size() - 2;
    return i - 1;
}

double HermiteTable::eval(double xq) const {
    const std::size_t i = locate(xq);
    const double hx = x[i + 1] - x[i];
    const double t = (xq - x[i]) / hx;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    return h00 * y[i] + h10 * hx * dy[i] + h01 * y[i + 1] + h11 * hx * dy[i + 1];
}

double HermiteTable::deriv(double xq) const {
    const std::size_t i = locate(xq);
    const double hx = x[i + 1] - x[i];
    const double t = (xq - x[i]) / hx;
    const double t2 = t * t;
    const double d00 = (6 * t2 - 6 * t) / hx, d10 = 3 * t2 - 4 * t + 1;
    const double d01 = (-6 * t2 + 6 * t) / hx, d11 = 3 * t2 - 2 * t;
    return d00 * y[i] + d10 * dy[i] + d01 * y[i + 1] + d11 * dy[i + 1];
}

double newton_bisection(const std::function<double(double)>& f,
                        const std::function<double(double)>& df,
                        double lo, double hi, double x0,
                        double tol, int max_iter) {
    double x = std::clamp(x0, lo, hi);
    for (int it = 0; it < max_iter; ++it) {
        const double fx = f(x);
        if (std::abs(fx) <= tol) return x;
        if (fx > 0)
            hi = x;
        else
            lo = x;
        const double dfx = df(x);
        double next = (dfx != 0.0) ? x - fx / dfx : lo - 1.0;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) < 1e-16 * (1.0 + std::abs(x)) && std::abs(fx) < 1e3 * tol)
            return next;
        x = next;
    }
    throw std::runtime_error("newton_bisection: no convergence");
}

}  // namespace frext
