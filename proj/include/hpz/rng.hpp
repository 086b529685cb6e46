#pragma once

// Deterministic random streams. All randomness in the library flows through
// these generators so that a (seed, stream tag) pair reproduces a run
// bit-for-bit on any platform. std:: distributions are avoided on purpose:
// their output is implementation-defined.

#include <cmath>
#include <cstdint>
#include <vector>

namespace hpz {

inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Derive a child seed from a parent seed and a stream tag.
inline uint64_t derive_seed(uint64_t seed, uint64_t tag) {
  uint64_t s = seed ^ (0x9E3779B97F4A7C15ull * (tag + 1));
  splitmix64(s);
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(uint64_t seed = 0x853C49E6748FEA9Bull) : state_(seed) {
    // warm up
    next();
    next();
  }

  uint64_t next() { return splitmix64(state_); }

  // uniform in [0,1)
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double m = std::sqrt(-2.0 * std::log(u1));
    spare_ = m * std::sin(6.283185307179586476925286766559 * u2);
    have_spare_ = true;
    return m * std::cos(6.283185307179586476925286766559 * u2);
  }

  // uniform point in the closed unit ball of dimension n (rejection)
  std::vector<double> in_unit_ball(int n) {
    std::vector<double> x(n);
    for (;;) {
      double s = 0;
      for (int i = 0; i < n; ++i) {
        x[i] = uniform(-1.0, 1.0);
        s += x[i] * x[i];
      }
      if (s <= 1.0) return x;
    }
  }

  // uniform direction on the unit sphere of dimension n
  std::vector<double> on_unit_sphere(int n) {
    std::vector<double> x(n);
    for (;;) {
      double s = 0;
      for (int i = 0; i < n; ++i) {
        x[i] = normal();
        s += x[i] * x[i];
      }
      if (s > 1e-24) {
        double inv = 1.0 / std::sqrt(s);
        for (int i = 0; i < n; ++i) x[i] *= inv;
        return x;
      }
    }
  }

  uint64_t below(uint64_t m) { return next() % m; }

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0;
};

// Scrambled Halton sequence: low-discrepancy points in [0,1)^n.
// Scrambling permutes digits per base with a seed-derived permutation.
class Halton {
 public:
  Halton(int dim, uint64_t seed);

  // i-th point (i >= 0), component-wise in [0,1)
  std::vector<double> point(long i) const;

 private:
  int dim_;
  std::vector<int> bases_;
  std::vector<std::vector<int>> perms_;  // one digit permutation per base
};

inline const int kHaltonBases[8] = {2, 3, 5, 7, 11, 13, 17, 19};

inline Halton::Halton(int dim, uint64_t seed) : dim_(dim) {
  bases_.assign(kHaltonBases, kHaltonBases + dim);
  perms_.resize(dim);
  for (int d = 0; d < dim; ++d) {
    int b = bases_[d];
    perms_[d].resize(b);
    for (int i = 0; i < b; ++i) perms_[d][i] = i;
    // Fisher-Yates with the derived stream; permutation fixes 0 so that
    // trailing zero digits stay zero (keeps the sequence well distributed).
    Rng r(derive_seed(seed, 1000 + d));
    for (int i = b - 1; i >= 2; --i) {
      int j = 1 + int(r.below(uint64_t(i)));
      std::swap(perms_[d][i], perms_[d][j]);
    }
  }
}

inline std::vector<double> Halton::point(long i) const {
  std::vector<double> out(dim_);
  for (int d = 0; d < dim_; ++d) {
    int b = bases_[d];
    double f = 1.0, v = 0.0;
    long k = i + 1;
    while (k > 0) {
      f /= b;
      v += f * perms_[d][k % b];
      k /= b;
    }
    out[d] = v;
  }
  return out;
}

}  // namespace hpz
