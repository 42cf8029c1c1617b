#include "triscord/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "triscord/errors.hpp"

namespace triscord {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kOffDiagonalTol = 1e-14;
constexpr int kMaxSweeps = 100;

void require_dim8(const DensityMatrix& rho, const char* op) {
  if (rho.dim() != 8) {
    throw InvalidInputError(std::string(op) + ": expected an 8x8 matrix, got " +
                            std::to_string(rho.dim()) + "x" + std::to_string(rho.dim()));
  }
}

int bit_shift(Subsystem s) noexcept {
  // A is the most significant bit.
  return 2 - static_cast<int>(s);
}

double off_diagonal_norm(const DensityMatrix& m) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (i != j) acc += m(i, j) * m(i, j);
    }
  }
  return std::sqrt(acc);
}

}  // namespace

const char* to_string(Subsystem s) noexcept {
  switch (s) {
    case Subsystem::A: return "A";
    case Subsystem::B: return "B";
    case Subsystem::C: return "C";
  }
  return "?";
}

DensityMatrix::DensityMatrix(std::size_t dim) : dim_(dim) {
  if (dim != 2 && dim != 4 && dim != 8) {
    throw InvalidInputError("DensityMatrix: dimension must be 2, 4 or 8, got " + std::to_string(dim));
  }
}

DensityMatrix DensityMatrix::identity(std::size_t dim) {
  DensityMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return (1.0 / static_cast<double>(dim)) * identity(dim);
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& diag) {
  DensityMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

double DensityMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool DensityMatrix::is_symmetric(double tol) const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    }
  }
  return true;
}

double DensityMatrix::max_abs_diff(const DensityMatrix& other) const {
  if (other.dim_ != dim_) throw InvalidInputError("max_abs_diff: dimension mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < dim_ * dim_; ++k) d = std::max(d, std::abs(data_[k] - other.data_[k]));
  return d;
}

DensityMatrix& DensityMatrix::operator+=(const DensityMatrix& rhs) {
  if (rhs.dim_ != dim_) throw InvalidInputError("operator+: dimension mismatch");
  for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] += rhs.data_[k];
  return *this;
}

DensityMatrix& DensityMatrix::operator*=(double s) noexcept {
  for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] *= s;
  return *this;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced) {
  require_dim8(rho, "partial_trace");
  const int shift = bit_shift(traced);
  // Map a 2-bit reduced index onto the full index with the traced bit = t.
  auto expand = [shift](std::size_t r, std::size_t t) {
    const std::size_t low = r & ((std::size_t{1} << shift) - 1);
    const std::size_t high = (r >> shift) << (shift + 1);
    return high | (t << shift) | low;
  };
  DensityMatrix out(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      out(i, j) = rho(expand(i, 0), expand(j, 0)) + rho(expand(i, 1), expand(j, 1));
    }
  }
  return out;
}

DensityMatrix partial_transpose(const DensityMatrix& rho, Subsystem transposed) {
  require_dim8(rho, "partial_transpose");
  const std::size_t mask = std::size_t{1} << bit_shift(transposed);
  DensityMatrix out(8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const std::size_t ri = (i & ~mask) | (j & mask);
      const std::size_t rj = (j & ~mask) | (i & mask);
      out(i, j) = rho(ri, rj);
    }
  }
  return out;
}

std::vector<double> jacobi_eigenvalues(const DensityMatrix& m) {
  if (!m.is_symmetric(kSymmetryTol)) {
    throw InvalidInputError("jacobi_eigenvalues: matrix is not symmetric");
  }
  DensityMatrix a = m;
  const std::size_t n = a.dim();

  int sweep = 0;
  while (off_diagonal_norm(a) > kOffDiagonalTol) {
    if (++sweep > kMaxSweeps) {
      throw NumericError("jacobi_eigenvalues: no convergence after " + std::to_string(kMaxSweeps) +
                         " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::pair<double, double> hermitian2_eigenvalues(const Hermitian2& h) noexcept {
  const double mean = 0.5 * (h.d0 + h.d1);
  const double half_diff = 0.5 * (h.d0 - h.d1);
  const double r = std::sqrt(half_diff * half_diff + std::norm(h.off));
  return {mean - r, mean + r};
}

}  // namespace triscord
