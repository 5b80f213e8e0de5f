#include "relwave/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace relwave::simd {

#ifdef RELWAVE_HAVE_AVX2_TU
const Kernels& avx2_kernels_impl();
#endif

const Kernels* avx2_kernels_or_null() {
#ifdef RELWAVE_HAVE_AVX2_TU
  return &avx2_kernels_impl();
#else
  return nullptr;
#endif
}

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const Kernels& resolve() {
  const char* env = std::getenv("RELWAVE_SIMD");
  const Kernels* avx2 = avx2_kernels_or_null();
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return scalar_kernels();
    if (std::strcmp(env, "avx2") == 0 && avx2 != nullptr && cpu_has_avx2_fma())
      return *avx2;
    // "auto" or anything unrecognized falls through to detection.
  }
  if (avx2 != nullptr && cpu_has_avx2_fma()) return *avx2;
  return scalar_kernels();
}

}  // namespace

const Kernels& kernels() {
  static const Kernels& k = resolve();
  return k;
}

std::vector<const Kernels*> available_kernels() {
  std::vector<const Kernels*> out = {&scalar_kernels()};
  if (const Kernels* a = avx2_kernels_or_null(); a != nullptr && cpu_has_avx2_fma())
    out.push_back(a);
  return out;
}

}  // namespace relwave::simd
