#pragma once

// Sparse real multivariate polynomials with exact term arithmetic
// (differentiation, products, Taylor recentering). Coefficients are doubles;
// "exact" means exact formulas with float rounding as the only error source.

#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace hpz {

using Point = std::vector<double>;
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic order: total degree first, then lex. Fixed so that
// serialized polynomials are canonical.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, double, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(int n) : n_(n) {}

  static MultiPoly zero(int n) { return MultiPoly(n); }
  static MultiPoly constant(int n, double c);
  static MultiPoly monomial(int n, const Exponents& e, double c);
  static MultiPoly variable(int n, int axis);  // x_axis

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  // degree of the zero polynomial is the sentinel -1
  int degree() const;
  double height() const;  // max |coefficient|; 0 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  // accumulate c into the coefficient of x^e; exact zeros are never stored
  void add_term(const Exponents& e, double c);

  double coefficient(const Exponents& e) const;

  // evaluation with compensated (Kahan) summation over terms
  double eval(std::span<const double> x) const;
  double eval(const Point& x) const { return eval(std::span<const double>(x)); }

  MultiPoly derivative(int axis) const;
  std::vector<MultiPoly> gradient() const;
  MultiPoly laplacian() const;
  // every Laplacian coefficient has magnitude <= tol * height(p)
  bool is_harmonic(double tol = 1e-10) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(double s) const;

  // drop |c| <= rel * height(); applied after compound arithmetic to stop
  // term blowup in repeated shifts
  MultiPoly pruned(double rel = 1e-14) const;

  // p(s*y)
  MultiPoly scaled_vars(double s) const;
  // p(R*y) for a row-major n x n matrix R
  MultiPoly compose_linear(const std::vector<double>& R) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  TermMap terms_;
};

inline MultiPoly operator*(double s, const MultiPoly& p) { return p * s; }

// Homogeneous decomposition: parts[i] is i-homogeneous, sum reproduces the
// source polynomial.
struct HomDecomp {
  std::vector<MultiPoly> parts;  // index = homogeneity degree, 0..d

  int degree() const { return int(parts.size()) - 1; }
  const MultiPoly& part(int i) const { return parts[size_t(i)]; }
  MultiPoly sum() const;
  // sum of parts of degree 1..k (the "low order part" at a zero-set point)
  MultiPoly low_order(int k, bool include_constant = true) const;
};

HomDecomp homogeneous_parts(const MultiPoly& p);

// Homogeneous parts of y -> p(x0 + y); exact binomial expansion.
HomDecomp taylor_shift(const MultiPoly& p, std::span<const double> x0);

// Smallest k >= 1 such that the degree-k part of p at x has height
// > tol * height(p). Requires |p(x)| small (x on the zero set).
int vanishing_order(const MultiPoly& p, std::span<const double> x,
                    double tol = 1e-9);

double binomial(int n, int k);

}  // namespace hpz
