#include "gcz/kernels.hpp"

#if defined(GCZ_HAVE_NEON)

#include <arm_neon.h>

namespace gcz::kern {
namespace {

std::int64_t span_q2_neon(const std::uint8_t* x, const std::uint8_t* y,
                          std::size_t n) {
  const uint8x16_t one = vdupq_n_u8(1);
  std::int64_t matches = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t eq = vceqq_u8(vld1q_u8(x + i), vld1q_u8(y + i));
    matches += vaddlvq_u8(vandq_u8(eq, one));
  }
  for (; i < n; ++i) matches += (x[i] == y[i]);
  return 2 * matches - static_cast<std::int64_t>(n);
}

GaussianSum span_q4_neon(const std::uint8_t* x, const std::uint8_t* y,
                         std::size_t n) {
  const uint8x16_t one = vdupq_n_u8(1);
  const uint8x16_t three = vdupq_n_u8(3);
  std::int64_t c0 = 0, c1 = 0, c2 = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t d = vandq_u8(vsubq_u8(vld1q_u8(x + i), vld1q_u8(y + i)), three);
    c0 += vaddlvq_u8(vandq_u8(vceqq_u8(d, vdupq_n_u8(0)), one));
    c1 += vaddlvq_u8(vandq_u8(vceqq_u8(d, vdupq_n_u8(1)), one));
    c2 += vaddlvq_u8(vandq_u8(vceqq_u8(d, vdupq_n_u8(2)), one));
  }
  std::int64_t c3 = static_cast<std::int64_t>(i) - c0 - c1 - c2;
  std::int64_t tc[4] = {0, 0, 0, 0};
  for (; i < n; ++i) ++tc[static_cast<std::uint8_t>(x[i] - y[i]) & 3];
  return {c0 + tc[0] - c2 - tc[2], c1 + tc[1] - c3 - tc[3]};
}

}  // namespace

const Kernels& neon_kernels() {
  static const Kernels k{"neon", span_q2_neon, span_q4_neon};
  return k;
}

}  // namespace gcz::kern

#endif  // GCZ_HAVE_NEON
