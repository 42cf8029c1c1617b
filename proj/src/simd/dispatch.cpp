#include <cstdlib>
#include <cstring>

#include "triscord/simd/grid_kernel.hpp"

namespace triscord::simd {

const char* to_string(SimdLevel level) noexcept {
  switch (level) {
    case SimdLevel::Scalar: return "scalar";
    case SimdLevel::Avx2: return "avx2";
  }
  return "?";
}

SimdLevel detect_simd_level() noexcept {
#if defined(TRISCORD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return SimdLevel::Avx2;
#endif
  return SimdLevel::Scalar;
}

SimdLevel default_simd_level() noexcept {
  static const SimdLevel level = [] {
    const char* env = std::getenv("TRISCORD_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return SimdLevel::Scalar;
    return detect_simd_level();
  }();
  return level;
}

EntropyRowFn kernel_for(SimdLevel level) noexcept {
#if defined(TRISCORD_HAVE_AVX2)
  if (level == SimdLevel::Avx2 && detect_simd_level() == SimdLevel::Avx2) return &entropy_row_avx2;
#else
  (void)level;
#endif
  return &entropy_row_scalar;
}

}  // namespace triscord::simd
