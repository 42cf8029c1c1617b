#pragma once

// First-principles conditional entropy S(A|BC): explicit product projective
// measurements on B and C, and an exhaustive search over their angles. Shares
// no code with the closed-form pipeline beyond the matrix kernels.
//
// Raw angle convention (theta1, theta2, phi1, phi2):
//   |b1> = cos t1 |0> + e^{i p1} sin t1 |1>,   |b2> = sin t1 |0> - e^{i p1} cos t1 |1>
//   |g1> = cos t2 |0> + e^{i p2} sin t2 |1>,   |g2> = sin t2 |0> - e^{i p2} cos t2 |1>

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>

#include "triscord/correlations.hpp"
#include "triscord/linalg.hpp"
#include "triscord/simd/grid_kernel.hpp"
#include "triscord/xstate.hpp"

namespace triscord {

using Qubit = std::array<std::complex<double>, 2>;

struct PvmPair {
  std::array<Qubit, 2> basis_b;
  std::array<Qubit, 2> basis_c;
  MeasurementAngles raw_angles;  // reduced into their periods
};

struct MeasurementOutcome {
  double p = 0.0;
  Hermitian2 conditional;        // normalised; left zero when zero_probability
  bool zero_probability = false;  // p < 1e-14
};

struct GridSpec {
  int n_theta = 48;  // steps over [0, pi)
  int n_phi = 48;    // steps over [0, 2 pi)
  bool refine = true;
  int refine_cycles = 3;  // coordinate-descent cycles after the grid pass
  unsigned workers = 0;   // 0: one per hardware thread
  std::optional<simd::SimdLevel> simd;  // empty: simd::default_simd_level()
};

// Gap tolerances for cross_validate.
inline constexpr double kGridTolerance = 2e-3;
inline constexpr double kRefinedTolerance = 1e-6;
// How far the oracle may sit below the analytic value.
inline constexpr double kUndershootTolerance = 1e-9;

double tolerance(const GridSpec& spec) noexcept;

PvmPair pvm_pair(const MeasurementAngles& raw);

// Outcome (i, j) is stored at index 2*i + j.
std::array<MeasurementOutcome, 4> measure(const DensityMatrix& rho, const PvmPair& pvm);

// sum_ij p_ij S(conditional_ij)
double measured_entropy(const DensityMatrix& rho, const PvmPair& pvm);

struct GridResult {
  double grid_min = 0.0;
  MeasurementAngles grid_argmin;  // raw angles of the best grid point
  double min = 0.0;               // after refinement (== grid_min when refine is off)
  MeasurementAngles argmin;
  std::size_t evaluations = 0;
  simd::SimdLevel simd = simd::SimdLevel::Scalar;
};

// Grid values within this distance of the minimum count as ties.
inline constexpr double kGridTieTolerance = 1e-12;

// Ties on the grid go to the lexicographically smallest (theta1, theta2, phi1, phi2).
GridResult grid_minimize(const DensityMatrix& rho, const GridSpec& spec = {});

// Closed-form S(A|BC) provider; replaceable so the harness can be checked
// against a deliberately broken rule.
using AnalyticCondEntropy = std::function<CondEntropyResult(const XParams&)>;

struct ValidationResult {
  XParams params;
  double analytic = 0.0;
  double oracle = 0.0;       // refined when the spec asks for it
  double grid_oracle = 0.0;  // grid-only minimum
  double gap = 0.0;          // oracle - analytic
  double grid_gap = 0.0;     // grid_oracle - analytic
  Branch branch = Branch::S1;
  MeasurementAngles oracle_argmin;
  bool pass = false;         // |gap| <= tolerance(spec) and oracle >= analytic - kUndershootTolerance
};

ValidationResult cross_validate(const XParams& p, const GridSpec& spec = {},
                                const AnalyticCondEntropy& analytic = conditional_entropy);

}  // namespace triscord
