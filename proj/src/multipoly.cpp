#include "hpz/multipoly.hpp"

#include <cmath>
#include <sstream>

#include "hpz/error.hpp"

namespace hpz {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return std::round(r);
}

MultiPoly MultiPoly::constant(int n, double c) {
  MultiPoly p(n);
  p.add_term(Exponents(size_t(n), 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(int n, const Exponents& e, double c) {
  if (int(e.size()) != n) throw InputError("monomial: exponent length != n");
  MultiPoly p(n);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(int n, int axis) {
  Exponents e(size_t(n), 0);
  e[size_t(axis)] = 1;
  return monomial(n, e, 1.0);
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);  // graded order: last is max
}

double MultiPoly::height() const {
  double h = 0;
  for (const auto& [e, c] : terms_) h = std::max(h, std::fabs(c));
  return h;
}

void MultiPoly::add_term(const Exponents& e, double c) {
  if (int(e.size()) != n_) throw InputError("add_term: exponent length != n");
  if (c == 0.0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

double MultiPoly::eval(std::span<const double> x) const {
  if (int(x.size()) != n_) throw InputError("eval: point dimension mismatch");
  double sum = 0.0, comp = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c;
    for (int i = 0; i < n_; ++i) {
      double xi = x[size_t(i)];
      for (int k = 0; k < e[size_t(i)]; ++k) t *= xi;
    }
    double y = t - comp;
    double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  return sum;
}

MultiPoly MultiPoly::derivative(int axis) const {
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) {
    int a = e[size_t(axis)];
    if (a == 0) continue;
    Exponents d = e;
    d[size_t(axis)] = a - 1;
    out.add_term(d, c * a);
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::gradient() const {
  std::vector<MultiPoly> g;
  g.reserve(size_t(n_));
  for (int i = 0; i < n_; ++i) g.push_back(derivative(i));
  return g;
}

MultiPoly MultiPoly::laplacian() const {
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < n_; ++i) {
      int a = e[size_t(i)];
      if (a < 2) continue;
      Exponents d = e;
      d[size_t(i)] = a - 2;
      out.add_term(d, c * a * (a - 1));
    }
  }
  return out;
}

bool MultiPoly::is_harmonic(double tol) const {
  return laplacian().height() <= tol * height();
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (o.n_ != n_) throw InputError("poly add: dimension mismatch");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out.pruned();
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (o.n_ != n_) throw InputError("poly sub: dimension mismatch");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out.pruned();
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (o.n_ != n_) throw InputError("poly mul: dimension mismatch");
  MultiPoly out(n_);
  Exponents e(size_t(n_), 0);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < n_; ++i) e[size_t(i)] = ea[size_t(i)] + eb[size_t(i)];
      out.add_term(e, ca * cb);
    }
  }
  return out.pruned();
}

MultiPoly MultiPoly::operator*(double s) const {
  MultiPoly out(n_);
  if (s == 0.0) return out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

MultiPoly MultiPoly::pruned(double rel) const {
  double cut = rel * height();
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_)
    if (std::fabs(c) > cut) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::scaled_vars(double s) const {
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) {
    double f = c;
    int d = total_degree(e);
    for (int i = 0; i < d; ++i) f *= s;
    out.add_term(e, f);
  }
  return out;
}

MultiPoly MultiPoly::compose_linear(const std::vector<double>& R) const {
  if (int(R.size()) != n_ * n_) throw InputError("compose_linear: bad matrix");
  // powers of each substituted linear form, computed on demand
  std::vector<std::vector<MultiPoly>> pows(size_t(n_), std::vector<MultiPoly>{});
  for (int i = 0; i < n_; ++i) {
    MultiPoly li(n_);
    for (int j = 0; j < n_; ++j) {
      Exponents e(size_t(n_), 0);
      e[size_t(j)] = 1;
      li.add_term(e, R[size_t(i * n_ + j)]);
    }
    pows[size_t(i)].push_back(MultiPoly::constant(n_, 1.0));
    pows[size_t(i)].push_back(li);
  }
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(n_, c);
    for (int i = 0; i < n_; ++i) {
      int a = e[size_t(i)];
      auto& pw = pows[size_t(i)];
      while (int(pw.size()) <= a) pw.push_back(pw.back() * pw[1]);
      if (a > 0) t = t * pw[size_t(a)];
    }
    out = out + t;
  }
  return out.pruned();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    os << std::fabs(c);
    for (int i = 0; i < n_; ++i) {
      if (e[size_t(i)] > 0) {
        os << "*x" << (i + 1);
        if (e[size_t(i)] > 1) os << "^" << e[size_t(i)];
      }
    }
    first = false;
  }
  return os.str();
}

MultiPoly HomDecomp::sum() const {
  if (parts.empty()) return MultiPoly();
  MultiPoly s(parts[0].n());
  for (const auto& p : parts) s = s + p;
  return s;
}

MultiPoly HomDecomp::low_order(int k, bool include_constant) const {
  if (parts.empty()) return MultiPoly();
  MultiPoly s(parts[0].n());
  int lo = include_constant ? 0 : 1;
  for (int i = lo; i <= k && i < int(parts.size()); ++i) s = s + parts[size_t(i)];
  return s;
}

HomDecomp homogeneous_parts(const MultiPoly& p) {
  HomDecomp out;
  int d = std::max(p.degree(), 0);
  out.parts.assign(size_t(d + 1), MultiPoly(p.n()));
  for (const auto& [e, c] : p.terms())
    out.parts[size_t(total_degree(e))].add_term(e, c);
  return out;
}

HomDecomp taylor_shift(const MultiPoly& p, std::span<const double> x0) {
  if (int(x0.size()) != p.n()) throw InputError("taylor_shift: bad point");
  int n = p.n();
  int d = std::max(p.degree(), 0);
  HomDecomp out;
  out.parts.assign(size_t(d + 1), MultiPoly(n));

  // p(x0+y) = sum_a c_a prod_i (x0_i + y_i)^{a_i}; expand binomially and
  // collect terms by |beta|.
  Exponents beta(size_t(n), 0);
  for (const auto& [alpha, c] : p.terms()) {
    // iterate over all beta <= alpha (odometer)
    std::fill(beta.begin(), beta.end(), 0);
    for (;;) {
      double coef = c;
      for (int i = 0; i < n; ++i) {
        int a = alpha[size_t(i)], b = beta[size_t(i)];
        coef *= binomial(a, b);
        for (int k = 0; k < a - b; ++k) coef *= x0[size_t(i)];
      }
      if (coef != 0.0) out.parts[size_t(total_degree(beta))].add_term(beta, coef);
      int i = 0;
      while (i < n) {
        if (beta[size_t(i)] < alpha[size_t(i)]) {
          ++beta[size_t(i)];
          break;
        }
        beta[size_t(i)] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
  for (auto& part : out.parts) part = part.pruned();
  return out;
}

int vanishing_order(const MultiPoly& p, std::span<const double> x, double tol) {
  double h = p.height();
  if (h == 0.0) throw InputError("vanishing_order: zero polynomial");
  double xmax = 0;
  for (double xi : x) xmax = std::max(xmax, std::fabs(xi));
  int d = std::max(p.degree(), 1);
  double scale = h * std::pow(1.0 + xmax, d);
  if (std::fabs(p.eval(x)) > 1e-3 * scale)
    throw InputError("vanishing_order: point is not on the zero set");
  HomDecomp parts = taylor_shift(p, x);
  for (int k = 1; k <= parts.degree(); ++k)
    if (parts.part(k).height() > tol * h) return k;
  throw NumericError("vanishing_order: p vanishes identically near x");
}

}  // namespace hpz
