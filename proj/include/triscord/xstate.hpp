#pragma once

// Three-parameter family of three-qubit X-states that are invariant under any
// qubit permutation and under the global flip of all qubits:
//
//   rho = 1/8 * [ 1-a1 on the corners (0,0),(7,7); c1 on (0,7),(7,0);
//                 1+a1/3 on the inner diagonal; c2 on the inner anti-diagonal ]
//
// Valid parameters: a1 in [-3,1], c1 in [a1-1, 1-a1], c2 in [-1-a1/3, 1+a1/3].

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "triscord/linalg.hpp"

namespace triscord {

struct XParams {
  double a1 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

// Closed boundaries are admitted up to this slack.
inline constexpr double kBoundaryTol = 1e-12;

struct ConstraintViolation {
  std::string parameter;  // "a1", "c1" or "c2"
  double value;
  double lower;
  double upper;
  double margin;  // distance outside [lower, upper]

  std::string describe() const;
};

struct ValidationReport {
  std::vector<ConstraintViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string describe() const;
};

ValidationReport validate(const XParams& p);

// Throws DomainError carrying the validation report if p is invalid.
void require_valid(const XParams& p);

DensityMatrix build_rho(const XParams& p);

// {(1-a1-c1)/8, (1-a1+c1)/8, 3 x (3+a1-3c2)/24, 3 x (3+a1+3c2)/24}
std::array<double, 8> rho_eigenvalues_closed(const XParams& p);

enum class GhzSign { Plus, Minus };

struct GhzLabel {
  unsigned k = 0;  // three-bit basis index, 0..7
  GhzSign sign = GhzSign::Plus;

  unsigned complement() const noexcept { return (~k) & 7u; }
};

// (|k> +/- |~k>)(<k| +/- <~k|) / 2
DensityMatrix ghz_component(const GhzLabel& label);

// Inverse of build_rho. Group averages are taken before checking the pattern;
// throws NotSymmetricXStateError naming the first entry off the pattern by > 1e-12.
XParams params_from_matrix(const DensityMatrix& rho);

// Conditional-uniform sampler: a1 ~ U[-3,1], then c1 and c2 uniform on their
// a1-dependent intervals. Bit-reproducible for a fixed seed.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : engine_(seed) {}

  XParams next();

 private:
  double uniform(double lo, double hi);

  std::mt19937_64 engine_;
};

// First draw of ParamSampler(seed).
XParams sample_params(std::uint64_t seed);

}  // namespace triscord
