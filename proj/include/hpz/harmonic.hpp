#pragma once

// Exact L2 geometry of polynomials on spheres and balls, and orthonormal
// bases of homogeneous harmonic polynomials. Monomial integrals are evaluated
// by the classical Gamma-function identity in exact rational/dfactorial form.

#include <vector>

#include "hpz/multipoly.hpp"

namespace hpz {

// integral over the unit sphere S^{n-1} of x^alpha; zero unless every
// exponent is even
double sphere_monomial_integral(const Exponents& alpha, int n);
// same value through the log-Gamma expansion (cross-check path)
double sphere_monomial_integral_loggamma(const Exponents& alpha, int n);
// integral over the ball B(0,r) of x^alpha
double ball_monomial_integral(const Exponents& alpha, int n, double r);

double sphere_area(int n, double r);  // measure of the sphere of radius r
double ball_volume(int n, double r);

// exact integrals of p*q over the sphere / ball centered at x0 with radius r
double l2_inner_sphere(const MultiPoly& p, const MultiPoly& q,
                       std::span<const double> x0, double r);
double l2_inner_ball(const MultiPoly& p, const MultiPoly& q,
                     std::span<const double> x0, double r);

// dimension of the space of k-homogeneous harmonic polynomials in n variables
int harmonic_dim(int n, int k);

struct HarmonicBasis {
  int n = 0;
  int k = 0;
  std::vector<MultiPoly> elements;          // k-homogeneous, harmonic
  std::vector<std::vector<double>> gram;    // sphere Gram matrix (~identity)
};

// orthonormal basis of k-homogeneous harmonic polynomials in n variables,
// built from the exact nullspace of the Laplacian constraint matrix followed
// by Gram-Schmidt in the unit-sphere inner product
HarmonicBasis harmonic_basis(int n, int k);

// process-wide cache (construction is deterministic)
const HarmonicBasis& harmonic_basis_cached(int n, int k);

// Concatenated spans of degrees 1..kmax with zero constant term: the search
// space for zero sets of harmonic polynomials of degree at most kmax
// containing the center.
struct SpanBasis {
  int n = 0;
  int kmax = 0;
  std::vector<MultiPoly> elements;
  std::vector<int> degree;  // homogeneity degree of each element

  int size() const { return int(elements.size()); }
};

SpanBasis harmonic_span(int n, int kmax);

// sum of coeffs[i] * elements[i]
MultiPoly span_combination(const SpanBasis& span, std::span<const double> c);

}  // namespace hpz
