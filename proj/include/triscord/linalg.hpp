#pragma once

// Small dense kernels for 2x2 / 4x4 / 8x8 real-symmetric density matrices
// and 2x2 complex-Hermitian conditional states.
//
// Qubit ordering is fixed library-wide: basis index k = 4*bit_A + 2*bit_B + bit_C.

#include <array>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace triscord {

enum class Subsystem { A = 0, B = 1, C = 2 };

const char* to_string(Subsystem s) noexcept;

class DensityMatrix {
 public:
  static constexpr std::size_t kMaxDim = 8;

  // Zero matrix; dim must be 2, 4 or 8.
  explicit DensityMatrix(std::size_t dim);

  static DensityMatrix identity(std::size_t dim);
  // identity / dim
  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix diagonal(const std::vector<double>& diag);

  std::size_t dim() const noexcept { return dim_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }

  double trace() const noexcept;
  bool is_symmetric(double tol = 1e-14) const noexcept;
  // Largest absolute entrywise difference; dims must agree.
  double max_abs_diff(const DensityMatrix& other) const;

  DensityMatrix& operator+=(const DensityMatrix& rhs);
  DensityMatrix& operator*=(double s) noexcept;

  friend DensityMatrix operator+(DensityMatrix lhs, const DensityMatrix& rhs) { return lhs += rhs; }
  friend DensityMatrix operator*(double s, DensityMatrix m) noexcept { return m *= s; }

 private:
  std::size_t dim_;
  std::array<double, kMaxDim * kMaxDim> data_{};
};

struct Hermitian2 {
  double d0 = 0.0;
  double d1 = 0.0;
  std::complex<double> off{};  // element (0,1); (1,0) is its conjugate

  double trace() const noexcept { return d0 + d1; }
  double determinant() const noexcept { return d0 * d1 - std::norm(off); }
};

// Reduced 4x4 state over the two remaining qubits (kept in A,B,C order).
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced);

// Transpose of the chosen qubit's row/column bits. Involutive, trace preserving.
DensityMatrix partial_transpose(const DensityMatrix& rho, Subsystem transposed);

// Cyclic Jacobi on a real symmetric matrix. Returns eigenvalues ascending.
// Throws InvalidInputError if |m_ij - m_ji| > 1e-12, NumericError if the
// off-diagonal norm is still above 1e-14 after 100 sweeps.
std::vector<double> jacobi_eigenvalues(const DensityMatrix& m);

// (min, max)
std::pair<double, double> hermitian2_eigenvalues(const Hermitian2& h) noexcept;

}  // namespace triscord
