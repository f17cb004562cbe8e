#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gcz::kern {

// Inner-loop kernels for correlation sums over contiguous exponent spans.
// For q = 2 the span sum is (#matches - #mismatches); for q = 4 it is the
// Gaussian integer (c0 - c2) + (c1 - c3)i where ck counts difference
// residue k. Exponents arrive as bytes; the engine stages them before
// calling. Variants must agree bit-for-bit; the equivalence tests iterate
// all_kernels().
struct GaussianSum {
  std::int64_t re = 0, im = 0;
};

struct Kernels {
  const char* name;
  std::int64_t (*span_q2)(const std::uint8_t* x, const std::uint8_t* y,
                          std::size_t n);
  GaussianSum (*span_q4)(const std::uint8_t* x, const std::uint8_t* y,
                         std::size_t n);
};

const Kernels& scalar_kernels();

// The preferred kernel set for this machine, chosen once at first use.
const Kernels& active_kernels();

// Every kernel set the current CPU can run (scalar first).
std::vector<const Kernels*> all_kernels();

#if defined(GCZ_HAVE_AVX2)
const Kernels& avx2_kernels();
bool avx2_supported();
#endif
#if defined(GCZ_HAVE_NEON)
const Kernels& neon_kernels();
#endif

}  // namespace gcz::kern
