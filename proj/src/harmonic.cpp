#include "hpz/harmonic.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>

#include "hpz/error.hpp"

namespace hpz {

namespace {

const long double kPi = 3.14159265358979323846264338327950288L;

long double dfactorial(int m) {  // m!! with (-1)!! = 1
  long double r = 1.0L;
  for (int i = m; i >= 2; i -= 2) r *= i;
  return r;
}

long double factorial(int m) {
  long double r = 1.0L;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

}  // namespace

double sphere_monomial_integral(const Exponents& alpha, int n) {
  if (int(alpha.size()) != n) throw InputError("sphere integral: bad index");
  int A = 0;
  for (int a : alpha) {
    if (a < 0) throw InputError("sphere integral: negative exponent");
    if (a % 2 == 1) return 0.0;
    A += a;
  }
  // 2 * prod Gamma((a_i+1)/2) / Gamma((A+n)/2) with half-integer Gammas in
  // double-factorial form: Gamma(b + 1/2) = (2b-1)!!/2^b * sqrt(pi)
  long double num = 1.0L;
  long double piHalves = n;  // power of sqrt(pi) carried by the numerator
  for (int a : alpha) {
    int b = a / 2;
    num *= dfactorial(2 * b - 1) / powl(2.0L, b);
  }
  long double den;
  if ((A + n) % 2 == 0) {
    den = factorial((A + n) / 2 - 1);
  } else {
    int m = (A + n - 1) / 2;
    den = dfactorial(2 * m - 1) / powl(2.0L, m);
    piHalves -= 1;
  }
  long double val = 2.0L * powl(kPi, piHalves / 2.0L) * num / den;
  return double(val);
}

double sphere_monomial_integral_loggamma(const Exponents& alpha, int n) {
  if (int(alpha.size()) != n) throw InputError("sphere integral: bad index");
  int A = 0;
  for (int a : alpha) {
    if (a % 2 == 1) return 0.0;
    A += a;
  }
  double s = 0.0;
  for (int a : alpha) s += std::lgamma((a + 1) / 2.0);
  s -= std::lgamma((A + n) / 2.0);
  return 2.0 * std::exp(s);
}

double ball_monomial_integral(const Exponents& alpha, int n, double r) {
  if (r <= 0) throw InputError("ball integral: r must be positive");
  int A = total_degree(alpha);
  return std::pow(r, A + n) / double(A + n) * sphere_monomial_integral(alpha, n);
}

double sphere_area(int n, double r) {
  Exponents zero(size_t(n), 0);
  return sphere_monomial_integral(zero, n) * std::pow(r, n - 1);
}

double ball_volume(int n, double r) {
  Exponents zero(size_t(n), 0);
  return ball_monomial_integral(zero, n, r);
}

namespace {

bool is_origin(std::span<const double> x0) {
  for (double v : x0)
    if (v != 0.0) return false;
  return true;
}

// Accumulate sum over term pairs of ca*cb*moment(alpha+beta). moment is a
// callable on the combined exponent.
template <class Moment>
double pair_sum(const MultiPoly& p, const MultiPoly& q, Moment&& moment) {
  Exponents g(size_t(p.n()), 0);
  double sum = 0.0, comp = 0.0;
  for (const auto& [ea, ca] : p.terms()) {
    for (const auto& [eb, cb] : q.terms()) {
      for (size_t i = 0; i < g.size(); ++i) g[i] = ea[i] + eb[i];
      double t = ca * cb * moment(g);
      double y = t - comp;
      double s = sum + y;
      comp = (s - sum) - y;
      sum = s;
    }
  }
  return sum;
}

}  // namespace

double l2_inner_sphere(const MultiPoly& p, const MultiPoly& q,
                       std::span<const double> x0, double r) {
  if (p.n() != q.n()) throw InputError("l2_inner_sphere: dimension mismatch");
  if (r <= 0) throw InputError("l2_inner_sphere: r must be positive");
  int n = p.n();
  const MultiPoly* pp = &p;
  const MultiPoly* qq = &q;
  MultiPoly ps, qs;
  if (!is_origin(x0)) {
    ps = taylor_shift(p, x0).sum();
    qs = taylor_shift(q, x0).sum();
    pp = &ps;
    qq = &qs;
  }
  return pair_sum(*pp, *qq, [&](const Exponents& g) {
    return std::pow(r, total_degree(g) + n - 1) * sphere_monomial_integral(g, n);
  });
}

double l2_inner_ball(const MultiPoly& p, const MultiPoly& q,
                     std::span<const double> x0, double r) {
  if (p.n() != q.n()) throw InputError("l2_inner_ball: dimension mismatch");
  if (r <= 0) throw InputError("l2_inner_ball: r must be positive");
  int n = p.n();
  const MultiPoly* pp = &p;
  const MultiPoly* qq = &q;
  MultiPoly ps, qs;
  if (!is_origin(x0)) {
    ps = taylor_shift(p, x0).sum();
    qs = taylor_shift(q, x0).sum();
    pp = &ps;
    qq = &qs;
  }
  return pair_sum(*pp, *qq, [&](const Exponents& g) {
    int A = total_degree(g);
    return std::pow(r, A + n) / double(A + n) * sphere_monomial_integral(g, n);
  });
}

int harmonic_dim(int n, int k) {
  double a = binomial(n + k - 1, n - 1);
  double b = (k >= 2) ? binomial(n + k - 3, n - 1) : 0.0;
  return int(a - b);
}

namespace {

void enumerate_degree(int n, int k, Exponents& cur, int axis,
                      std::vector<Exponents>& out) {
  if (axis == n - 1) {
    cur[size_t(axis)] = k;
    out.push_back(cur);
    return;
  }
  for (int a = k; a >= 0; --a) {
    cur[size_t(axis)] = a;
    enumerate_degree(n, k - a, cur, axis + 1, out);
  }
}

std::vector<Exponents> monomials_of_degree(int n, int k) {
  std::vector<Exponents> out;
  Exponents cur(size_t(n), 0);
  enumerate_degree(n, k, cur, 0, out);
  return out;
}

}  // namespace

HarmonicBasis harmonic_basis(int n, int k) {
  if (n < 2 || k < 1) throw InputError("harmonic_basis: need n >= 2, k >= 1");
  HarmonicBasis hb;
  hb.n = n;
  hb.k = k;

  auto monos = monomials_of_degree(n, k);
  int m = int(monos.size());
  std::map<Exponents, int, GradedLex> row_of;
  std::vector<Exponents> rows = (k >= 2) ? monomials_of_degree(n, k - 2)
                                         : std::vector<Exponents>{};
  for (int i = 0; i < int(rows.size()); ++i) row_of[rows[size_t(i)]] = i;

  // Laplacian constraint matrix: integer entries a(a-1) per second derivative
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(std::max<int>(1, int(rows.size())), m);
  if (k >= 2) {
    for (int col = 0; col < m; ++col) {
      const Exponents& e = monos[size_t(col)];
      for (int i = 0; i < n; ++i) {
        int a = e[size_t(i)];
        if (a < 2) continue;
        Exponents d = e;
        d[size_t(i)] = a - 2;
        L(row_of[d], col) += double(a) * double(a - 1);
      }
    }
  }

  // column scaling before the rank decision
  Eigen::VectorXd scale(m);
  for (int c = 0; c < m; ++c) {
    double s = L.col(c).cwiseAbs().maxCoeff();
    scale(c) = (s > 0) ? s : 1.0;
    L.col(c) /= scale(c);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(L);
  lu.setThreshold(1e-10);
  Eigen::MatrixXd kernel = lu.kernel();
  if (k < 2) kernel = Eigen::MatrixXd::Identity(m, m);
  // kernel vectors v' of the scaled matrix give coefficient vectors
  // v = v' / scale componentwise (L*D*v' = 0 with D = diag(1/scale))
  for (int c = 0; c < kernel.cols(); ++c)
    for (int r = 0; r < m; ++r) kernel(r, c) /= scale(r);

  int dim = harmonic_dim(n, k);
  if (int(kernel.cols()) != dim)
    throw NumericError("harmonic_basis: kernel dimension mismatch");

  std::vector<MultiPoly> raw;
  raw.reserve(size_t(dim));
  for (int c = 0; c < dim; ++c) {
    MultiPoly e(n);
    for (int r = 0; r < m; ++r)
      if (kernel(r, c) != 0.0) e.add_term(monos[size_t(r)], kernel(r, c));
    raw.push_back(e.pruned(1e-13));
  }

  // Gram-Schmidt in the unit-sphere inner product, classical with one
  // reorthogonalization pass. Moments are cached per combined exponent.
  std::map<Exponents, double, GradedLex> moment_cache;
  auto ip = [&](const MultiPoly& a, const MultiPoly& b) {
    Exponents g(size_t(n), 0);
    double sum = 0.0, comp = 0.0;
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) {
        for (size_t i = 0; i < g.size(); ++i) g[i] = ea[i] + eb[i];
        auto it = moment_cache.find(g);
        double mom;
        if (it == moment_cache.end()) {
          mom = sphere_monomial_integral(g, n);
          moment_cache.emplace(g, mom);
        } else {
          mom = it->second;
        }
        double t = ca * cb * mom;
        double y = t - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
      }
    return sum;
  };

  std::vector<MultiPoly>& basis = hb.elements;
  for (int i = 0; i < dim; ++i) {
    MultiPoly v = raw[size_t(i)];
    for (int pass = 0; pass < 2; ++pass)
      for (const MultiPoly& u : basis) v = v - u * ip(v, u);
    double nrm = std::sqrt(ip(v, v));
    if (nrm <= 0) throw NumericError("harmonic_basis: degenerate element");
    basis.push_back((v * (1.0 / nrm)).pruned(1e-14));
  }

  hb.gram.assign(size_t(dim), std::vector<double>(size_t(dim), 0.0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j) {
      double g = ip(basis[size_t(i)], basis[size_t(j)]);
      hb.gram[size_t(i)][size_t(j)] = g;
      hb.gram[size_t(j)][size_t(i)] = g;
    }
  return hb;
}

const HarmonicBasis& harmonic_basis_cached(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, HarmonicBasis> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, harmonic_basis(n, k)).first;
  return it->second;
}

SpanBasis harmonic_span(int n, int kmax) {
  SpanBasis sb;
  sb.n = n;
  sb.kmax = kmax;
  for (int k = 1; k <= kmax; ++k) {
    const HarmonicBasis& hb = harmonic_basis_cached(n, k);
    for (const MultiPoly& e : hb.elements) {
      sb.elements.push_back(e);
      sb.degree.push_back(k);
    }
  }
  return sb;
}

MultiPoly span_combination(const SpanBasis& span, std::span<const double> c) {
  if (int(c.size()) != span.size())
    throw InputError("span_combination: coefficient count mismatch");
  MultiPoly q(span.n);
  for (int i = 0; i < span.size(); ++i) {
    if (c[size_t(i)] == 0.0) continue;
    for (const auto& [e, v] : span.elements[size_t(i)].terms())
      q.add_term(e, v * c[size_t(i)]);
  }
  return q.pruned();
}

}  // namespace hpz
