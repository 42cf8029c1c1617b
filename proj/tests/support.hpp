#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "triscord/correlations.hpp"
#include "triscord/xstate.hpp"

namespace triscord::testing {

// Independent of ParamSampler: uniform a1, then c1/c2 uniform on their intervals.
class TripleGen {
 public:
  explicit TripleGen(std::uint64_t seed) : rng_(seed) {}

  XParams next() {
    XParams p;
    p.a1 = uniform(-3.0, 1.0);
    p.c1 = uniform(p.a1 - 1.0, 1.0 - p.a1);
    p.c2 = uniform(-1.0 - p.a1 / 3.0, 1.0 + p.a1 / 3.0);
    return p;
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  MeasurementAngles angles() {
    return {uniform(0.0, kPi), uniform(0.0, kPi), uniform(0.0, 2.0 * kPi), uniform(0.0, 2.0 * kPi)};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double max_abs_diff(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace triscord::testing
