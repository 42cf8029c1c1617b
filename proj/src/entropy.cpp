#include "triscord/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "triscord/errors.hpp"

namespace triscord {

namespace {
constexpr double kEigenClamp = 1e-10;

// For arguments that are nonnegative on the validated domain; boundary slack
// can push them a few ulps below zero.
double xlog2_nonneg(double x) { return xlog2(std::max(x, 0.0)); }
}  // namespace

double xlog2(double x) {
  if (x < -kZeroClamp) throw DomainError("xlog2: negative argument " + std::to_string(x));
  if (x <= 0.0) return 0.0;
  return x * std::log2(x);
}

double epsilon(double x) {
  const double ax = std::abs(x);
  if (!(ax <= 1.0 + kZeroClamp)) throw DomainError("epsilon: |x| > 1 (x = " + std::to_string(x) + ")");
  const double y = std::min(ax, 1.0);
  return xlog2(1.0 + y) + xlog2(1.0 - y);
}

double gamma(double x) {
  if (!(x >= -3.0 - kZeroClamp && x <= 1.0 + kZeroClamp)) {
    throw DomainError("gamma: x outside [-3, 1] (x = " + std::to_string(x) + ")");
  }
  return xlog2_nonneg(3.0 + x) + xlog2_nonneg(3.0 - 3.0 * x) - 2.0 * xlog2_nonneg(3.0 - x);
}

double s_total(const XParams& p) {
  require_valid(p);
  const double a1 = p.a1;
  const double c1 = p.c1;
  const double c2 = p.c2;
  const double bracket = 2.0 * (3.0 + a1) * std::log2(3.0) - xlog2_nonneg(1.0 - a1 - c1) -
                         xlog2_nonneg(1.0 - a1 + c1) - xlog2_nonneg(3.0 + a1 - 3.0 * c2) -
                         xlog2_nonneg(3.0 + a1 + 3.0 * c2);
  return 3.0 + bracket / 8.0;
}

double s_ab(const XParams& p) {
  require_valid(p);
  const double a1 = p.a1;
  return -xlog2_nonneg(3.0 - a1) / 6.0 - xlog2_nonneg(3.0 + a1) / 6.0 + 2.0 + std::log2(3.0);
}

double von_neumann_numeric(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : jacobi_eigenvalues(rho)) {
    if (lambda < -kEigenClamp) {
      throw NotAStateError("von_neumann_numeric: eigenvalue " + std::to_string(lambda) +
                           " below positivity tolerance");
    }
    s -= xlog2(std::max(lambda, 0.0));
  }
  return s;
}

double mutual_info_ab(const XParams& p) { return 2.0 - s_ab(p); }

}  // namespace triscord
