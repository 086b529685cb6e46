#include "hpz/catalog.hpp"

#include <cmath>

#include "hpz/error.hpp"
#include "hpz/harmonic.hpp"

namespace hpz {

MultiPoly cross_poly(int n) {
  if (n < 2) throw InputError("cross_poly: n >= 2");
  Exponents e(size_t(n), 0);
  e[0] = 1;
  e[1] = 1;
  return MultiPoly::monomial(n, e, 1.0);
}

MultiPoly coordinate_product(int n, int m) {
  if (m > n) throw InputError("coordinate_product: m <= n required");
  Exponents e(size_t(n), 0);
  for (int i = 0; i < m; ++i) e[size_t(i)] = 1;
  return MultiPoly::monomial(n, e, 1.0);
}

namespace {

// coefficients of Re((x+iy)^k) and Im((x+iy)^k) into a poly over axes (ax,ay)
void add_zk(MultiPoly& p, int n, int ax, int ay, int k, double creal,
            double cimag) {
  for (int j = 0; j <= k; ++j) {
    double b = binomial(k, j);
    Exponents e(size_t(n), 0);
    e[size_t(ax)] = k - j;
    e[size_t(ay)] = j;
    // i^j cycle: 1, i, -1, -i
    switch (j % 4) {
      case 0: p.add_term(e, creal * b); break;
      case 1: p.add_term(e, cimag * b); break;
      case 2: p.add_term(e, -creal * b); break;
      case 3: p.add_term(e, -cimag * b); break;
    }
  }
}

}  // namespace

MultiPoly re_zk(int k, double phi) { return re_zk_lifted(k, 2, phi); }

MultiPoly re_zk_lifted(int k, int n, double phi) {
  if (k < 1 || n < 2) throw InputError("re_zk: k >= 1, n >= 2");
  MultiPoly p(n);
  // Re(e^{i phi} z^k) = cos(phi) Re(z^k) - sin(phi) Im(z^k)
  add_zk(p, n, 0, 1, k, std::cos(phi), -std::sin(phi));
  return p.pruned();
}

MultiPoly szulkin() {
  MultiPoly p(3);
  p.add_term({3, 0, 0}, 1.0);
  p.add_term({1, 2, 0}, -3.0);
  p.add_term({0, 0, 3}, 1.0);
  p.add_term({2, 0, 1}, -1.5);
  p.add_term({0, 2, 1}, -1.5);
  return p;
}

MultiPoly lm_cusp() {
  MultiPoly p(3);
  p.add_term({2, 0, 0}, 1.0);
  p.add_term({0, 2, 0}, -1.0);
  p.add_term({0, 0, 3}, 1.0);
  p.add_term({2, 0, 1}, -3.0);
  return p;
}

MultiPoly pair_sum_poly(int k, double a, double b) {
  MultiPoly p(4);
  add_zk(p, 4, 0, 1, k, a, 0.0);
  add_zk(p, 4, 2, 3, k, b, 0.0);
  return p.pruned();
}

MultiPoly random_harmonic(int n, int d, Rng& rng, bool with_constant) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    MultiPoly p(n);
    if (with_constant) p.add_term(Exponents(size_t(n), 0), rng.normal());
    double top = 0.0;
    for (int k = 1; k <= d; ++k) {
      const HarmonicBasis& hb = harmonic_basis_cached(n, k);
      for (const MultiPoly& e : hb.elements) {
        double c = rng.normal();
        if (k == d) top = std::max(top, std::fabs(c));
        p = p + e * c;
      }
    }
    if (top > 0.05) return p.pruned();
  }
  throw NumericError("random_harmonic: failed to draw nondegenerate top degree");
}

Point random_zero_point(const MultiPoly& p, Rng& rng, const Point& center,
                        double radius, int max_tries) {
  int n = p.n();
  for (int t = 0; t < max_tries; ++t) {
    Point a = rng.in_unit_ball(n), b = rng.in_unit_ball(n);
    for (int i = 0; i < n; ++i) {
      a[size_t(i)] = center[size_t(i)] + radius * a[size_t(i)];
      b[size_t(i)] = center[size_t(i)] + radius * b[size_t(i)];
    }
    double fa = p.eval(a), fb = p.eval(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0) == (fb < 0)) continue;
    for (int it = 0; it < 80; ++it) {
      Point m(size_t(n), 0.0);
      for (int i = 0; i < n; ++i) m[size_t(i)] = 0.5 * (a[size_t(i)] + b[size_t(i)]);
      double fm = p.eval(m);
      if (fm == 0.0) return m;
      if ((fm < 0) == (fa < 0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    return a;
  }
  return {};
}

}  // namespace hpz
