#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hpz/catalog.hpp"
#include "hpz/harmonic.hpp"
#include "hpz/rng.hpp"

using namespace hpz;

namespace {
const double kPi = 3.14159265358979323846;

// independent rank oracle: Gaussian elimination with partial pivoting
int brute_rank(std::vector<std::vector<double>> M) {
  if (M.empty()) return 0;
  size_t rows = M.size(), cols = M[0].size();
  int rank = 0;
  size_t rr = 0;
  for (size_t c = 0; c < cols && rr < rows; ++c) {
    size_t piv = rr;
    for (size_t r = rr; r < rows; ++r)
      if (std::fabs(M[r][c]) > std::fabs(M[piv][c])) piv = r;
    if (std::fabs(M[piv][c]) < 1e-9) continue;
    std::swap(M[piv], M[rr]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rr) continue;
      double f = M[r][c] / M[rr][c];
      for (size_t cc = 0; cc < cols; ++cc) M[r][cc] -= f * M[rr][cc];
    }
    ++rank;
    ++rr;
  }
  return rank;
}
}  // namespace

TEST_CASE("sphere monomial integrals") {
  CHECK(sphere_monomial_integral({0, 0, 0}, 3) == doctest::Approx(4 * kPi));
  CHECK(sphere_monomial_integral({2, 0, 0}, 3) ==
        doctest::Approx(4 * kPi / 3.0));
  CHECK(sphere_monomial_integral({1, 0, 0}, 3) == 0.0);
  CHECK(sphere_monomial_integral({3, 2, 0}, 3) == 0.0);
  CHECK(sphere_monomial_integral({2, 0}, 2) == doctest::Approx(kPi));

  // symmetry: three equal integrals summing to the integral of |x|^2
  double s = 3.0 * sphere_monomial_integral({2, 0, 0}, 3);
  CHECK(s == doctest::Approx(4 * kPi));
}

TEST_CASE("double-factorial path matches log-Gamma path") {
  for (int n = 2; n <= 5; ++n) {
    Rng rng(17 + uint64_t(n));
    for (int t = 0; t < 60; ++t) {
      Exponents a(size_t(n), 0);
      for (auto& v : a) v = 2 * int(rng.below(6));
      double x = sphere_monomial_integral(a, n);
      double y = sphere_monomial_integral_loggamma(a, n);
      CHECK(std::fabs(x - y) <= 1e-12 * std::max(1.0, std::fabs(x)));
    }
  }
}

TEST_CASE("ball monomial integrals") {
  CHECK(ball_monomial_integral({0, 0}, 2, 1.0) == doctest::Approx(kPi));
  CHECK(ball_monomial_integral({0, 0, 0}, 3, 2.0) ==
        doctest::Approx(32.0 * kPi / 3.0));
  CHECK(ball_monomial_integral({1, 0}, 2, 1.0) == 0.0);
  CHECK(ball_volume(2, 1.0) == doctest::Approx(kPi));
  CHECK(sphere_area(3, 1.0) == doctest::Approx(4 * kPi));
}

TEST_CASE("l2 inner products") {
  MultiPoly one = MultiPoly::constant(3, 1.0);
  CHECK(l2_inner_sphere(one, one, Point{0, 0, 0}, 1.0) ==
        doctest::Approx(4 * kPi));

  MultiPoly x1 = MultiPoly::variable(2, 0);
  CHECK(l2_inner_sphere(x1, x1, Point{0, 0}, 1.0) == doctest::Approx(kPi));

  // homogeneous harmonic polynomials of different degrees are orthogonal
  const HarmonicBasis& h2 = harmonic_basis_cached(3, 2);
  const HarmonicBasis& h3 = harmonic_basis_cached(3, 3);
  for (const auto& e : h2.elements)
    for (const auto& f : h3.elements)
      for (double r : {0.5, 1.0, 2.0})
        CHECK(std::fabs(l2_inner_sphere(e, f, Point{0, 0, 0}, r)) <=
              1e-8 * std::sqrt(l2_inner_sphere(e, e, Point{0, 0, 0}, r) *
                               l2_inner_sphere(f, f, Point{0, 0, 0}, r)));

  // shifted-center inner product against a direct expansion
  MultiPoly p = cross_poly(2);
  Point x0{0.3, -0.2};
  MultiPoly ps = taylor_shift(p, x0).sum();
  double direct = l2_inner_sphere(ps, ps, Point{0, 0}, 0.7);
  CHECK(l2_inner_sphere(p, p, x0, 0.7) == doctest::Approx(direct));
}

TEST_CASE("harmonic basis dimensions and quality") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 6; ++k) {
      const HarmonicBasis& hb = harmonic_basis_cached(n, k);
      int expect = harmonic_dim(n, k);
      CHECK(int(hb.elements.size()) == expect);
      for (const auto& e : hb.elements) {
        CHECK(e.laplacian().height() <= 1e-10 * e.height());
        CHECK(e.degree() == k);
      }
      for (size_t i = 0; i < hb.elements.size(); ++i)
        for (size_t j = 0; j < hb.elements.size(); ++j)
          CHECK(std::fabs(hb.gram[i][j] - (i == j ? 1.0 : 0.0)) <= 1e-8);
    }
  }
  CHECK(int(harmonic_basis_cached(2, 3).elements.size()) == 2);
  CHECK(int(harmonic_basis_cached(3, 2).elements.size()) == 5);
  CHECK(int(harmonic_basis_cached(4, 2).elements.size()) == 9);
}

TEST_CASE("n=4 k=2 dimension cross-checked by brute-force nullspace rank") {
  // Laplacian constraint on 2-homogeneous monomials in R^4
  std::vector<Exponents> monos;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Exponents e(4, 0);
      e[size_t(i)] += 1;
      e[size_t(j)] += 1;
      monos.push_back(e);
    }
  REQUIRE(monos.size() == 10);
  std::vector<std::vector<double>> L(1, std::vector<double>(10, 0.0));
  for (size_t c = 0; c < monos.size(); ++c)
    for (int i = 0; i < 4; ++i)
      if (monos[c][size_t(i)] == 2) L[0][c] = 2.0;
  int rank = brute_rank(L);
  CHECK(int(monos.size()) - rank == 9);
}

TEST_CASE("n=2 k=3 span matches z^3 harmonics") {
  const HarmonicBasis& hb = harmonic_basis_cached(2, 3);
  // project the classical pair onto the basis and check the residual
  for (const MultiPoly& target : {re_zk(3, 0.0), re_zk(3, -kPi / 2)}) {
    MultiPoly resid = target;
    for (const auto& e : hb.elements) {
      double c = l2_inner_sphere(target, e, Point{0, 0}, 1.0);
      resid = resid - e * c;
    }
    CHECK(resid.height() <= 1e-9 * target.height());
  }
}

TEST_CASE("basis elements are homogeneous of degree k") {
  Rng rng(31);
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k) {
      const HarmonicBasis& hb = harmonic_basis_cached(n, k);
      for (const auto& e : hb.elements)
        for (int t = 0; t < 50; ++t) {
          double lam = rng.uniform(0.3, 1.8);
          Point y(size_t(n), 0.0);
          for (auto& v : y) v = rng.uniform(-1, 1);
          Point ly = y;
          for (auto& v : ly) v *= lam;
          double lhs = e.eval(ly);
          double rhs = std::pow(lam, k) * e.eval(y);
          CHECK(std::fabs(lhs - rhs) <= 1e-9 * (1.0 + std::fabs(rhs)));
        }
    }
}

TEST_CASE("reverse Hoelder on spheres: sup vs L2 bounded ratio") {
  Rng rng(77);
  double worst = 0;
  for (int t = 0; t < 40; ++t) {
    int n = 2 + int(rng.below(2));
    int k = 1 + int(rng.below(4));
    MultiPoly p = random_harmonic(n, k, rng);
    double l2 = std::sqrt(l2_inner_sphere(p, p, Point(size_t(n), 0.0), 1.0) /
                          sphere_area(n, 1.0));
    double sup = 0;
    for (int s = 0; s < 4000; ++s) {
      Point u = rng.on_unit_sphere(n);
      sup = std::max(sup, std::fabs(p.eval(u)));
    }
    worst = std::max(worst, sup / l2);
    CHECK(sup / l2 >= 0.99);  // sup dominates the mean
  }
  MESSAGE("sup/L2 sphere ratio <= ", worst);
  CHECK(worst < 50.0);
}

TEST_CASE("harmonic span combination") {
  SpanBasis sb = harmonic_span(2, 3);
  CHECK(sb.size() == 2 + 2 + 2);
  std::vector<double> c(size_t(sb.size()), 0.0);
  c[0] = 1.0;
  c[3] = 0.5;
  MultiPoly q = span_combination(sb, c);
  MultiPoly expect = sb.elements[0] + sb.elements[3] * 0.5;
  CHECK((q - expect).height() <= 1e-14);
  CHECK(q.eval(Point{0.0, 0.0}) == doctest::Approx(0.0));  // zero constant term
}
