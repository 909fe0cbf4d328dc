#include <cstdlib>
#include <string_view>

#include "tcdyn/kernels.hpp"

namespace tcdyn::kernels {

#if defined(TCDYN_HAVE_AVX2)
const KernelTable* avx2_table_impl();
#endif

const KernelTable* avx2_table() {
#if defined(TCDYN_HAVE_AVX2)
  return avx2_table_impl();
#else
  return nullptr;
#endif
}

bool cpu_has_avx2() {
#if defined(TCDYN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& active() {
  static const KernelTable& table = []() -> const KernelTable& {
    if (const char* env = std::getenv("TCDYN_SIMD"); env && std::string_view(env) == "scalar") return scalar_table();
    if (const KernelTable* t = avx2_table(); t && cpu_has_avx2()) return *t;
    return scalar_table();
  }();
  return table;
}

}  // namespace tcdyn::kernels
