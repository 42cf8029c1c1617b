#pragma once

// Base-2 entropy primitives and closed-form entropies of the symmetric X-state.

#include "triscord/linalg.hpp"
#include "triscord/xstate.hpp"

namespace triscord {

// Values in [-kZeroClamp, 0) are treated as exact zeros.
inline constexpr double kZeroClamp = 1e-12;

// x * log2(x) with 0 log 0 = 0. Throws DomainError for x < -1e-12.
double xlog2(double x);

// (1+x) log2(1+x) + (1-x) log2(1-x), for |x| <= 1 + 1e-12.
double epsilon(double x);

// (3+x) log2(3+x) + (3-3x) log2(3-3x) - 2 (3-x) log2(3-x), for x in [-3, 1].
double gamma(double x);

// S(rho) from the closed-form spectrum.
double s_total(const XParams& p);

// S(rho_AB); depends on a1 only.
double s_ab(const XParams& p);

// -sum xlog2(lambda) over the Jacobi spectrum. Eigenvalues in [-1e-10, 0) are
// clamped; anything lower throws NotAStateError.
double von_neumann_numeric(const DensityMatrix& rho);

// I(rho_AB) = S(rho_A) + S(rho_B) - S(rho_AB) with both one-qubit marginals identity/2.
double mutual_info_ab(const XParams& p);

}  // namespace triscord
