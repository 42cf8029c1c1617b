#include <cmath>

#include "triscord/simd/grid_kernel.hpp"

namespace triscord::simd {

namespace {

inline double xlog2_pos(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Entropy contribution of the two outcomes (j = 0, 1) of one B outcome.
inline double block_entropy(const ProjectedBlock& m, double ct, double st, double cp, double sp) {
  const double cc = ct * ct;
  const double ss = st * st;
  const double cs = ct * st;

  // Diagonal blocks a = a' = 0 and a = a' = 1; their cross term is real.
  const double k0 = 2.0 * (cp * m.re[1] - sp * m.im[1]);
  const double k1 = 2.0 * (cp * m.re[11] - sp * m.im[11]);
  // Off-diagonal block a = 0, a' = 1: B00 = M[0][2], B01 = M[0][3], B10 = M[1][2], B11 = M[1][3].
  const double kre = cp * m.re[3] - sp * m.im[3] + cp * m.re[6] + sp * m.im[6];
  const double kim = cp * m.im[3] + sp * m.re[3] + cp * m.im[6] - sp * m.re[6];

  double total = 0.0;
  for (int j = 0; j < 2; ++j) {
    const double uu = j == 0 ? cc : ss;
    const double rr = j == 0 ? ss : cc;
    const double ur = j == 0 ? cs : -cs;

    const double d0 = uu * m.re[0] + rr * m.re[5] + ur * k0;
    const double d1 = uu * m.re[10] + rr * m.re[15] + ur * k1;
    const double ore = uu * m.re[2] + rr * m.re[7] + ur * kre;
    const double oim = uu * m.im[2] + rr * m.im[7] + ur * kim;

    const double p = d0 + d1;
    if (p < kZeroProbability) continue;
    const double hd = 0.5 * (d0 - d1);
    const double rad = std::sqrt(hd * hd + ore * ore + oim * oim);
    total += xlog2_pos(p) - xlog2_pos(0.5 * p + rad) - xlog2_pos(0.5 * p - rad);
  }
  return total;
}

}  // namespace

void entropy_row_scalar(const ProjectedBlock& m0, const ProjectedBlock& m1, const CBasisTable& c,
                        std::span<double> out) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double ct = c.cos_theta[k];
    const double st = c.sin_theta[k];
    const double cp = c.cos_phi[k];
    const double sp = c.sin_phi[k];
    out[k] = block_entropy(m0, ct, st, cp, sp) + block_entropy(m1, ct, st, cp, sp);
  }
}

}  // namespace triscord::simd
