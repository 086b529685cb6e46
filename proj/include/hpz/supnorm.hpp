#pragma once

// Sampled sup norms on balls: scrambled low-discrepancy points plus local
// ascent polishing. Values are certified lower bounds on the true sup.

#include "hpz/multipoly.hpp"
#include "hpz/rng.hpp"

namespace hpz {

inline constexpr uint64_t kDefaultSeed = 0x5EEDBA5Eull;

struct SupOptions {
  long count = 0;        // sample count; 0 means 4096 * n
  int polish_steps = 20;
  int polish_starts = 8;
  uint64_t seed = kDefaultSeed;
};

struct SupResult {
  double value = 0;
  Point argmax;
  long samples = 0;
};

// max of |p|, p^+ = max(p,0), p^- = max(-p,0) over the closed ball B(x0,r)
SupResult sup_ball(const MultiPoly& p, std::span<const double> x0, double r,
                   const SupOptions& opts = {});
SupResult sup_pos(const MultiPoly& p, std::span<const double> x0, double r,
                  const SupOptions& opts = {});
SupResult sup_neg(const MultiPoly& p, std::span<const double> x0, double r,
                  const SupOptions& opts = {});

}  // namespace hpz
