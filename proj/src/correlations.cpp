#include "triscord/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "triscord/entropy.hpp"
#include "triscord/errors.hpp"

namespace triscord {

namespace {

constexpr double kRadicandTol = 1e-12;
constexpr double kEpsilonArgSlack = 1e-9;
constexpr double kTieTol = 1e-12;
constexpr double kD3Clamp = 1e-10;
constexpr double kS3RangeTol = 1e-12;

double wrap(double x, double period) noexcept {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  // fmod of a value just below a multiple can round up to the period itself.
  if (r >= period) r = 0.0;
  return r;
}

double checked_sqrt(double radicand, const char* what) {
  if (radicand < -kRadicandTol) {
    throw NumericError(std::string("lambda_set: negative radicand in ") + what + " (" +
                       std::to_string(radicand) + ")");
  }
  return std::sqrt(std::max(radicand, 0.0));
}

// Arguments in (1, 1 + 1e-9] are float noise at the domain boundary.
double clamp_epsilon_arg(double x) {
  const double ax = std::abs(x);
  if (ax > 1.0 + kEpsilonArgSlack) {
    throw DomainError("epsilon argument out of range: " + std::to_string(x));
  }
  return std::min(ax, 1.0);
}

double s3_radicand(const XParams& p) {
  const double d = p.c1 - p.c2;
  return d * d * d / p.c1;
}

double xlog2_nonneg(double x) { return xlog2(std::max(x, 0.0)); }

}  // namespace

MeasurementAngles MeasurementAngles::reduced() const noexcept {
  return {wrap(theta1, kPi), wrap(theta2, kPi), wrap(phi1, 2.0 * kPi), wrap(phi2, 2.0 * kPi)};
}

MeasurementAngles to_transformed(const MeasurementAngles& raw) noexcept {
  return {raw.theta1, raw.theta2, raw.phi1 - raw.phi2, raw.phi1 + raw.phi2};
}

MeasurementAngles to_raw(const MeasurementAngles& t) noexcept {
  return {t.theta1, t.theta2, 0.5 * (t.phi2 + t.phi1), 0.5 * (t.phi2 - t.phi1)};
}

const char* to_string(Branch b) noexcept {
  switch (b) {
    case Branch::S1: return "S1";
    case Branch::S2: return "S2";
    case Branch::S3: return "S3";
  }
  return "?";
}

LambdaSet lambda_set(const XParams& p, const MeasurementAngles& t) {
  const double a1 = p.a1;
  const double c1 = p.c1;
  const double c2 = p.c2;
  const double k1 = std::cos(2.0 * t.theta1);
  const double k2 = std::cos(2.0 * t.theta2);
  const double s1 = std::sin(2.0 * t.theta1);
  const double s2 = std::sin(2.0 * t.theta2);
  const double cp1 = std::cos(t.phi1);
  const double cp2 = std::cos(t.phi2);

  LambdaSet l;
  l.lambda_a = 3.0 + a1 * k1 * k2;
  l.lambda_b = 3.0 - a1 * k1 * k2;
  const double f = (c1 - c2) * (c1 - c2) + 4.0 * c2 * (cp1 + cp2) * (c2 * cp1 + c1 * cp2);
  l.lambda_c = 9.0 / 16.0 * s1 * s1 * s2 * s2 * f;

  const double r12 = checked_sqrt(a1 * a1 * (k1 + k2) * (k1 + k2) + l.lambda_c, "lambda_1,2");
  const double r34 = checked_sqrt(a1 * a1 * (k1 - k2) * (k1 - k2) + l.lambda_c, "lambda_3,4");
  l.lambda = {l.lambda_b + r12, l.lambda_b - r12, l.lambda_a + r34, l.lambda_a - r34};
  return l;
}

double s_rel(const XParams& p, const MeasurementAngles& t) {
  const LambdaSet l = lambda_set(p, t);
  double sum = 0.0;
  for (double v : l.lambda) sum += xlog2_nonneg(v);
  return 1.0 + (xlog2_nonneg(l.lambda_a) + xlog2_nonneg(l.lambda_b)) / 6.0 - sum / 12.0;
}

double s1(const XParams& p) { return 1.0 - gamma(p.a1) / 12.0; }

double s2(const XParams& p) { return 1.0 - 0.5 * epsilon(clamp_epsilon_arg((3.0 * p.c2 + p.c1) / 4.0)); }

bool s3_applicable(const XParams& p) {
  if (p.c1 == 0.0) return false;
  const double cos_phi = -(p.c1 + p.c2) / (2.0 * p.c1);
  if (!(cos_phi >= -1.0 - kS3RangeTol && cos_phi <= 1.0 + kS3RangeTol)) return false;
  if ((p.c1 - p.c2) / p.c1 < 0.0) return false;
  return 0.25 * std::sqrt(s3_radicand(p)) <= 1.0 + kEpsilonArgSlack;
}

std::optional<double> s3_phi(const XParams& p) {
  if (!s3_applicable(p)) return std::nullopt;
  return std::acos(std::clamp(-(p.c1 + p.c2) / (2.0 * p.c1), -1.0, 1.0));
}

std::optional<double> s3(const XParams& p) {
  if (!s3_applicable(p)) return std::nullopt;
  const double arg = 0.25 * std::sqrt(std::max(s3_radicand(p), 0.0));
  return 1.0 - 0.5 * epsilon(clamp_epsilon_arg(arg));
}

MeasurementAngles branch_angles(const XParams& p, Branch b) {
  switch (b) {
    case Branch::S1: return {0.0, 0.0, 0.0, 0.0};
    case Branch::S2: return {kPi / 4.0, kPi / 4.0, 0.0, 0.0};
    case Branch::S3: return {kPi / 4.0, kPi / 4.0, 0.0, s3_phi(p).value_or(0.0)};
  }
  return {};
}

CondEntropyResult conditional_entropy(const XParams& p) {
  require_valid(p);
  CondEntropyResult r;
  r.candidates[0] = s1(p);
  const bool s3_region = std::abs(3.0 * p.c1) >= std::abs(p.c2) && p.c1 * p.c2 < 0.0;
  if (s3_region) {
    r.candidates[2] = s3(p);
  } else {
    r.candidates[1] = s2(p);
  }

  // Earlier branches win ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.candidates.size(); ++i) {
    if (r.candidates[i] && *r.candidates[i] < *r.candidates[best] - kTieTol) best = i;
  }
  r.value = *r.candidates[best];
  r.branch = static_cast<Branch>(best);
  r.angles = branch_angles(p, r.branch);
  return r;
}

namespace {
double clamp_d3(double d) { return (d < 0.0 && d >= -kD3Clamp) ? 0.0 : d; }
}  // namespace

double gtqd(const XParams& p) {
  return clamp_d3(conditional_entropy(p).value + s_ab(p) - s_total(p));
}

double t3(const XParams& p) { return 1.0 + s_ab(p) - s_total(p); }

double j3(const XParams& p) { return 1.0 - conditional_entropy(p).value; }

double negativity_analytic(const XParams& p) {
  require_valid(p);
  const double a1 = p.a1;
  const double c1 = p.c1;
  const double c2 = p.c2;
  const double sum = std::abs(3.0 + a1 - 3.0 * c1) + std::abs(3.0 + a1 + 3.0 * c1) +
                     2.0 * std::abs(3.0 + a1 - 3.0 * c2) + 2.0 * std::abs(3.0 + a1 + 3.0 * c2) +
                     3.0 * std::abs(1.0 - a1 - c2) + 3.0 * std::abs(1.0 - a1 + c2);
  const double n = sum / 24.0 - 1.0;
  return (n < 0.0 && n >= -kZeroClamp) ? 0.0 : n;
}

double negativity_numeric(const DensityMatrix& rho, Subsystem transposed) {
  double sum = 0.0;
  for (double v : jacobi_eigenvalues(partial_transpose(rho, transposed))) sum += std::abs(v);
  const double n = sum - 1.0;
  return (n < 0.0 && n >= -kZeroClamp) ? 0.0 : n;
}

CorrelationReport report(const XParams& p) {
  const CondEntropyResult cond = conditional_entropy(p);
  CorrelationReport r;
  r.params = p;
  r.s_rho = s_total(p);
  r.s_ab = s_ab(p);
  r.s_cond = cond.value;
  r.branch = cond.branch;
  r.t3 = 1.0 + r.s_ab - r.s_rho;
  r.j3 = 1.0 - r.s_cond;
  r.d3 = clamp_d3(r.s_cond + r.s_ab - r.s_rho);
  r.n3 = negativity_analytic(p);
  return r;
}

}  // namespace triscord
