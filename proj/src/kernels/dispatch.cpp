#include <cstdio>
#include <cstdlib>
#include <string_view>

#include "ntnsim/kernels/kernels.hpp"

namespace ntnsim::kernels {

bool avx2Available() noexcept {
#if defined(NTNSIM_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops* avx2Ops() noexcept {
#if defined(NTNSIM_HAVE_AVX2)
  if (avx2Available()) {
    return &detail::avx2OpsImpl();
  }
#endif
  return nullptr;
}

const Ops& activeOps() {
  static const Ops& chosen = []() -> const Ops& {
    const char* pref = std::getenv("NTNSIM_KERNEL");
    if (pref != nullptr) {
      const std::string_view want(pref);
      if (want == "scalar") {
        return scalarOps();
      }
      if (want == "avx2") {
        if (const Ops* simd = avx2Ops()) {
          return *simd;
        }
        std::fprintf(stderr, "ntnsim: NTNSIM_KERNEL=avx2 requested but AVX2 is "
                             "unavailable; using scalar kernels\n");
        return scalarOps();
      }
      std::fprintf(stderr, "ntnsim: unknown NTNSIM_KERNEL value '%s' ignored\n", pref);
    }
    if (const Ops* simd = avx2Ops()) {
      return *simd;
    }
    return scalarOps();
  }();
  return chosen;
}

}  // namespace ntnsim::kernels
