// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "triscord/simd/grid_kernel.hpp"

namespace triscord::simd {

namespace {

// log(1+f) = f - (hfsq - s*(hfsq + R(s^2))), s = f/(2+f); fdlibm minimax coefficients.
constexpr double kLg1 = 6.666666666666735130e-01;
constexpr double kLg2 = 3.999999999940941908e-01;
constexpr double kLg3 = 2.857142874366239149e-01;
constexpr double kLg4 = 2.222219843214978396e-01;
constexpr double kLg5 = 1.818357216161805012e-01;
constexpr double kLg6 = 1.531383769920937332e-01;
constexpr double kLg7 = 1.479819860511658591e-01;
constexpr double kInvLn2 = 1.44269504088896338700e+00;
constexpr double kSqrt2 = 1.41421356237309504880;
// Below this the argument is treated as zero (0 log 0 = 0); also keeps the
// exponent extraction away from subnormals.
constexpr double kTiny = 1e-300;

inline __m256d log2_pd(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i exp_biased = _mm256_srli_epi64(bits, 52);
  const __m256i mant_bits =
      _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
                      _mm256_set1_epi64x(0x3FF0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mant_bits);  // [1, 2)

  // int64 exponent -> double via the 1.5 * 2^52 bias trick.
  const __m256i e_shift = _mm256_add_epi64(_mm256_sub_epi64(exp_biased, _mm256_set1_epi64x(1023)),
                                           _mm256_set1_epi64x(0x4338000000000000LL));
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(e_shift), _mm256_set1_pd(6755399441055744.0));

  const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(kSqrt2), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));

  const __m256d f = _mm256_sub_pd(m, _mm256_set1_pd(1.0));
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(_mm256_set1_pd(2.0), f));
  const __m256d z = _mm256_mul_pd(s, s);
  __m256d r = _mm256_set1_pd(kLg7);
  r = _mm256_fmadd_pd(r, z, _mm256_set1_pd(kLg6));
  r = _mm256_fmadd_pd(r, z, _mm256_set1_pd(kLg5));
  r = _mm256_fmadd_pd(r, z, _mm256_set1_pd(kLg4));
  r = _mm256_fmadd_pd(r, z, _mm256_set1_pd(kLg3));
  r = _mm256_fmadd_pd(r, z, _mm256_set1_pd(kLg2));
  r = _mm256_fmadd_pd(r, z, _mm256_set1_pd(kLg1));
  r = _mm256_mul_pd(r, z);
  const __m256d hfsq = _mm256_mul_pd(_mm256_set1_pd(0.5), _mm256_mul_pd(f, f));
  const __m256d log1pf =
      _mm256_sub_pd(f, _mm256_fnmadd_pd(s, _mm256_add_pd(hfsq, r), hfsq));
  return _mm256_fmadd_pd(log1pf, _mm256_set1_pd(kInvLn2), e);
}

inline __m256d xlog2_pd(__m256d x) {
  const __m256d positive = _mm256_cmp_pd(x, _mm256_set1_pd(kTiny), _CMP_GT_OQ);
  const __m256d safe = _mm256_blendv_pd(_mm256_set1_pd(1.0), x, positive);
  return _mm256_and_pd(positive, _mm256_mul_pd(safe, log2_pd(safe)));
}

struct BlockCoeffs {
  __m256d re[16];
  __m256d im[16];

  explicit BlockCoeffs(const ProjectedBlock& m) {
    for (int k = 0; k < 16; ++k) {
      re[k] = _mm256_set1_pd(m.re[k]);
      im[k] = _mm256_set1_pd(m.im[k]);
    }
  }
};

inline __m256d block_entropy(const BlockCoeffs& m, __m256d ct, __m256d st, __m256d cp, __m256d sp) {
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d cc = _mm256_mul_pd(ct, ct);
  const __m256d ss = _mm256_mul_pd(st, st);
  const __m256d cs = _mm256_mul_pd(ct, st);
  const __m256d ncs = _mm256_sub_pd(_mm256_setzero_pd(), cs);

  const __m256d k0 = _mm256_mul_pd(two, _mm256_fmsub_pd(cp, m.re[1], _mm256_mul_pd(sp, m.im[1])));
  const __m256d k1 = _mm256_mul_pd(two, _mm256_fmsub_pd(cp, m.re[11], _mm256_mul_pd(sp, m.im[11])));
  const __m256d kre = _mm256_add_pd(_mm256_fmsub_pd(cp, m.re[3], _mm256_mul_pd(sp, m.im[3])),
                                    _mm256_fmadd_pd(cp, m.re[6], _mm256_mul_pd(sp, m.im[6])));
  const __m256d kim = _mm256_add_pd(_mm256_fmadd_pd(cp, m.im[3], _mm256_mul_pd(sp, m.re[3])),
                                    _mm256_fmsub_pd(cp, m.im[6], _mm256_mul_pd(sp, m.re[6])));

  __m256d total = _mm256_setzero_pd();
  for (int j = 0; j < 2; ++j) {
    const __m256d uu = j == 0 ? cc : ss;
    const __m256d rr = j == 0 ? ss : cc;
    const __m256d ur = j == 0 ? cs : ncs;

    const __m256d d0 = _mm256_fmadd_pd(uu, m.re[0], _mm256_fmadd_pd(rr, m.re[5], _mm256_mul_pd(ur, k0)));
    const __m256d d1 =
        _mm256_fmadd_pd(uu, m.re[10], _mm256_fmadd_pd(rr, m.re[15], _mm256_mul_pd(ur, k1)));
    const __m256d ore =
        _mm256_fmadd_pd(uu, m.re[2], _mm256_fmadd_pd(rr, m.re[7], _mm256_mul_pd(ur, kre)));
    const __m256d oim =
        _mm256_fmadd_pd(uu, m.im[2], _mm256_fmadd_pd(rr, m.im[7], _mm256_mul_pd(ur, kim)));

    const __m256d p = _mm256_add_pd(d0, d1);
    const __m256d hd = _mm256_mul_pd(half, _mm256_sub_pd(d0, d1));
    const __m256d rad = _mm256_sqrt_pd(
        _mm256_fmadd_pd(hd, hd, _mm256_fmadd_pd(ore, ore, _mm256_mul_pd(oim, oim))));
    const __m256d hp = _mm256_mul_pd(half, p);
    const __m256d term = _mm256_sub_pd(
        xlog2_pd(p), _mm256_add_pd(xlog2_pd(_mm256_add_pd(hp, rad)), xlog2_pd(_mm256_sub_pd(hp, rad))));
    const __m256d live = _mm256_cmp_pd(p, _mm256_set1_pd(kZeroProbability), _CMP_GE_OQ);
    total = _mm256_add_pd(total, _mm256_and_pd(live, term));
  }
  return total;
}

}  // namespace

void log2_avx2(std::span<const double> x, std::span<double> out) {
  std::size_t k = 0;
  for (; k + 4 <= x.size(); k += 4) _mm256_storeu_pd(&out[k], log2_pd(_mm256_loadu_pd(&x[k])));
  if (k < x.size()) {
    alignas(32) double in[4] = {1.0, 1.0, 1.0, 1.0};
    alignas(32) double res[4];
    for (std::size_t t = 0; k + t < x.size(); ++t) in[t] = x[k + t];
    _mm256_store_pd(res, log2_pd(_mm256_load_pd(in)));
    for (std::size_t t = 0; k + t < x.size(); ++t) out[k + t] = res[t];
  }
}

void entropy_row_avx2(const ProjectedBlock& m0, const ProjectedBlock& m1, const CBasisTable& c,
                      std::span<double> out) {
  const BlockCoeffs b0(m0);
  const BlockCoeffs b1(m1);
  const std::size_t n = c.size();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d ct = _mm256_loadu_pd(&c.cos_theta[k]);
    const __m256d st = _mm256_loadu_pd(&c.sin_theta[k]);
    const __m256d cp = _mm256_loadu_pd(&c.cos_phi[k]);
    const __m256d sp = _mm256_loadu_pd(&c.sin_phi[k]);
    _mm256_storeu_pd(&out[k], _mm256_add_pd(block_entropy(b0, ct, st, cp, sp),
                                            block_entropy(b1, ct, st, cp, sp)));
  }
  if (k < n) {
    // Tail: pad with the computational basis and drop the extra lanes.
    alignas(32) double ct[4] = {1.0, 1.0, 1.0, 1.0};
    alignas(32) double st[4] = {0.0, 0.0, 0.0, 0.0};
    alignas(32) double cp[4] = {1.0, 1.0, 1.0, 1.0};
    alignas(32) double sp[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t t = 0; k + t < n; ++t) {
      ct[t] = c.cos_theta[k + t];
      st[t] = c.sin_theta[k + t];
      cp[t] = c.cos_phi[k + t];
      sp[t] = c.sin_phi[k + t];
    }
    const __m256d vct = _mm256_load_pd(ct);
    const __m256d vst = _mm256_load_pd(st);
    const __m256d vcp = _mm256_load_pd(cp);
    const __m256d vsp = _mm256_load_pd(sp);
    alignas(32) double res[4];
    _mm256_store_pd(res, _mm256_add_pd(block_entropy(b0, vct, vst, vcp, vsp),
                                       block_entropy(b1, vct, vst, vcp, vsp)));
    for (std::size_t t = 0; k + t < n; ++t) out[k + t] = res[t];
  }
}

}  // namespace triscord::simd
