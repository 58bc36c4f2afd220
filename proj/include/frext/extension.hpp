// extension.hpp
//
// The extension operator f -> f-hat sigma, its L^6(R^2) norm by direct plane
// quadrature and by the triple-convolution route, and the closed-form
// Gaussian extensions on the dilated parabola.

#pragma once

#include "frext/convolution.hpp"
#include "frext/fields.hpp"
#include "frext/plane_scheme.hpp"

namespace frext {

// f-hat sigma(x,t) = ∫ f(z) e^{-i (x,t)·z} d sigma(z) on every grid node.
// Sets the warning flag when max |(x,t)| * (arc grid step) > 0.5.
ComplexField extend(const ArcFunction& f, const PlaneGrid& grid, int threads = 0);

// Direct L^6 norm: truncated plane integrals at the three control radii plus
// a least-squares c/R tail extrapolation. Graph-built arcs use the
// parabola-adapted frame; other arcs use the polar scheme.
L6Result l6_norm_direct(const ArcFunction& f, const L6Control& ctrl = {});

// (2 pi ||f sigma * f sigma * f sigma||_2)^{1/3}; requires real f (|f| is
// used, matching the nonnegative reduction).
double l6_norm_convolution(const ArcFunction& f, const TripleConvControl& ctrl = {});

// ||f-hat sigma||_6 / ||f||_{L^2(sigma)}
double rayleigh(const ArcFunction& f, const L6Control& ctrl = {});

enum class GaussianKind { G1, G2, G3, Phi1 };

// Closed-form extensions of the Gaussian family on the parabola z = lambda y^2/2
// with projection measure. Principal branch for the complex square roots.
cplx gaussian_closed_form(GaussianKind kind, double lambda, double x, double t);

// (2 pi)^{1/2} 3^{-1/12} mu^{-1/6}
double foschi_constant(double mu);

}  // namespace frext
