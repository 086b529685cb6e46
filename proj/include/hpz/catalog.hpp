#pragma once

// Named polynomials used throughout the test batteries, plus random
// harmonic-polynomial draws and zero-set point sampling helpers.

#include "hpz/multipoly.hpp"
#include "hpz/rng.hpp"

namespace hpz {

// x1*x2 embedded in R^n
MultiPoly cross_poly(int n);

// product x1*...*xm in R^n (harmonic: no repeated variable)
MultiPoly coordinate_product(int n, int m);

// Re(e^{i phi} (x+iy)^k) in R^2: k equiangular lines through the origin
MultiPoly re_zk(int k, double phi = 0.0);

// the same polynomial viewed in R^n (cylinder over the planar zero set)
MultiPoly re_zk_lifted(int k, int n, double phi = 0.0);

// Szulkin's cubic x^3 - 3xy^2 + z^3 - (3/2)(x^2+y^2)z; zero set separates R^3
MultiPoly szulkin();

// x^2 - y^2 + z^3 - 3x^2 z: separates R^3 into two domains with a cusp at 0
MultiPoly lm_cusp();

// a*q(x1,y1) + b*q(x2,y2) in R^4 with q = Re(z^k); separates R^4
MultiPoly pair_sum_poly(int k, double a = 1.0, double b = 1.0);

// random harmonic polynomial with degrees 1..d (optionally a constant term),
// coefficients i.i.d. standard normal in the orthonormal harmonic basis;
// the top-degree block is re-drawn until it is nondegenerate
MultiPoly random_harmonic(int n, int d, Rng& rng, bool with_constant = false);

// find a point of the zero set inside B(center, radius) by sign-change
// bisection along random segments; returns empty vector if none found
Point random_zero_point(const MultiPoly& p, Rng& rng, const Point& center,
                        double radius, int max_tries = 256);

}  // namespace hpz
