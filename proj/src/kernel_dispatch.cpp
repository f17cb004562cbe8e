#include "gcz/kernels.hpp"

namespace gcz::kern {

const Kernels& active_kernels() {
  static const Kernels& chosen = []() -> const Kernels& {
#if defined(GCZ_HAVE_AVX2)
    if (avx2_supported()) return avx2_kernels();
#endif
#if defined(GCZ_HAVE_NEON)
    return neon_kernels();
#endif
    return scalar_kernels();
  }();
  return chosen;
}

std::vector<const Kernels*> all_kernels() {
  std::vector<const Kernels*> v{&scalar_kernels()};
#if defined(GCZ_HAVE_AVX2)
  if (avx2_supported()) v.push_back(&avx2_kernels());
#endif
#if defined(GCZ_HAVE_NEON)
  v.push_back(&neon_kernels());
#endif
  return v;
}

}  // namespace gcz::kern
