#pragma once

// Inner loop of the brute-force measurement search.
//
// For a fixed basis on qubit B the state is first contracted over B, leaving
// two 4x4 Hermitian blocks over (A, C), one per B outcome. The kernel then
// sweeps a batch of qubit-C bases (theta2, phi2) and, for every one of them,
// returns the post-measurement entropy of A summed over the four outcomes:
//
//   sum_ij [ xlog2(p_ij) - xlog2(e+_ij) - xlog2(e-_ij) ]
//
// where e+/- are the eigenvalues of the unnormalised 2x2 conditional state.
// Outcomes with p_ij < 1e-14 contribute zero.
//
// Every variant must agree with entropy_row_scalar to 1e-12.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace triscord::simd {

inline constexpr double kZeroProbability = 1e-14;

// Complex 4x4 block, row-major over the composite index 2*bit_A + bit_C.
struct ProjectedBlock {
  std::array<double, 16> re{};
  std::array<double, 16> im{};
};

// Structure-of-arrays table of qubit-C bases.
struct CBasisTable {
  std::vector<double> cos_theta;
  std::vector<double> sin_theta;
  std::vector<double> cos_phi;
  std::vector<double> sin_phi;

  std::size_t size() const noexcept { return cos_theta.size(); }
};

using EntropyRowFn = void (*)(const ProjectedBlock& m0, const ProjectedBlock& m1, const CBasisTable& c,
                              std::span<double> out);

void entropy_row_scalar(const ProjectedBlock& m0, const ProjectedBlock& m1, const CBasisTable& c,
                        std::span<double> out);

#if defined(TRISCORD_HAVE_AVX2)
void entropy_row_avx2(const ProjectedBlock& m0, const ProjectedBlock& m1, const CBasisTable& c,
                      std::span<double> out);

// Vector log2 used by the AVX2 kernel, exposed for accuracy tests. x > 0, finite, normal.
void log2_avx2(std::span<const double> x, std::span<double> out);
#endif

enum class SimdLevel { Scalar, Avx2 };

const char* to_string(SimdLevel level) noexcept;

// Best level this CPU and build support.
SimdLevel detect_simd_level() noexcept;

// detect_simd_level(), lowered to Scalar when TRISCORD_SIMD=scalar is set.
SimdLevel default_simd_level() noexcept;

// Falls back to the scalar kernel for levels this build or CPU cannot run.
EntropyRowFn kernel_for(SimdLevel level) noexcept;

}  // namespace triscord::simd
