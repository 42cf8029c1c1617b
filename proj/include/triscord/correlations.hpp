#pragma once

// Closed-form genuine tripartite correlations of the symmetric X-state.
//
// The conditional entropy S(A|BC) is the minimum over product projective
// measurements on B and C of the post-measurement entropy of A. Written in the
// transformed phases (phi1, phi2) = (raw phi_B - raw phi_C, raw phi_B + raw phi_C)
// the objective reduces to a function of seven "lambda" quantities, and its
// minimum is one of three closed forms:
//
//   S1 = 1 - gamma(a1)/12                      at (0, 0, 0, 0)
//   S2 = 1 - epsilon((3 c2 + c1)/4)/2          at (pi/4, pi/4, 0, 0)
//   S3 = 1 - epsilon(sqrt((c1-c2)^3/c1)/4)/2   at (pi/4, pi/4, 0, acos(-(c1+c2)/(2 c1)))
//
// with S(A|BC) = min{S1, S3} when |3 c1| >= |c2| and c1 c2 < 0, else min{S1, S2}.

#include <array>
#include <optional>
#include <string>

#include "triscord/linalg.hpp"
#include "triscord/xstate.hpp"

namespace triscord {

inline constexpr double kPi = 3.14159265358979323846;

// theta in [0, pi), phi in [0, 2 pi). Whether the phases are raw basis phases
// or the transformed (difference, sum) pair depends on the consumer.
struct MeasurementAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;

  // Each angle reduced into its period.
  MeasurementAngles reduced() const noexcept;

  friend bool operator==(const MeasurementAngles&, const MeasurementAngles&) = default;
};

// Raw (theta1, theta2, phi_B, phi_C) -> (theta1, theta2, phi_B - phi_C, phi_B + phi_C).
MeasurementAngles to_transformed(const MeasurementAngles& raw) noexcept;
// Inverse of to_transformed.
MeasurementAngles to_raw(const MeasurementAngles& transformed) noexcept;

struct LambdaSet {
  double lambda_a = 0.0;
  double lambda_b = 0.0;
  double lambda_c = 0.0;
  std::array<double, 4> lambda{};  // lambda_1 (+ root), lambda_2, lambda_3 (+ root), lambda_4
};

enum class Branch { S1 = 0, S2 = 1, S3 = 2 };

const char* to_string(Branch b) noexcept;

struct CondEntropyResult {
  double value = 0.0;
  Branch branch = Branch::S1;
  MeasurementAngles angles;  // transformed angles attaining `value`
  // Values the branch rule compared; branches it excluded (or an undefined S3) are empty.
  std::array<std::optional<double>, 3> candidates;
};

struct CorrelationReport {
  XParams params;
  double s_rho = 0.0;
  double s_ab = 0.0;
  double s_cond = 0.0;
  Branch branch = Branch::S1;
  double d3 = 0.0;
  double t3 = 0.0;
  double j3 = 0.0;
  double n3 = 0.0;
};

// Throws NumericError if a radicand is below -1e-12.
LambdaSet lambda_set(const XParams& p, const MeasurementAngles& transformed);

// 1 + (lA log2 lA + lB log2 lB)/6 - sum_i li log2 li / 12
double s_rel(const XParams& p, const MeasurementAngles& transformed);

double s1(const XParams& p);
double s2(const XParams& p);
// Empty when the S3 stationary point does not exist.
std::optional<double> s3(const XParams& p);

bool s3_applicable(const XParams& p);
// acos(-(c1+c2)/(2 c1)), or empty when S3 is not applicable.
std::optional<double> s3_phi(const XParams& p);

// Transformed angle point at which a branch is evaluated.
MeasurementAngles branch_angles(const XParams& p, Branch b);

CondEntropyResult conditional_entropy(const XParams& p);

// D3 = S(A|BC) + S(AB) - S(rho)
double gtqd(const XParams& p);
// T3 = 1 + S(AB) - S(rho)
double t3(const XParams& p);
// J3 = 1 - S(A|BC)
double j3(const XParams& p);

double negativity_analytic(const XParams& p);
// sum |eig(rho^{T_sub})| - 1 via the Jacobi spectrum.
double negativity_numeric(const DensityMatrix& rho, Subsystem transposed = Subsystem::C);

CorrelationReport report(const XParams& p);

}  // namespace triscord
