#include "gcz/kernels.hpp"

#if defined(GCZ_HAVE_AVX2)

#include <immintrin.h>

namespace gcz::kern {
namespace {

std::int64_t span_q2_avx2(const std::uint8_t* x, const std::uint8_t* y,
                          std::size_t n) {
  std::int64_t matches = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    unsigned mask =
        static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(vx, vy)));
    matches += __builtin_popcount(mask);
  }
  for (; i < n; ++i) matches += (x[i] == y[i]);
  return 2 * matches - static_cast<std::int64_t>(n);
}

GaussianSum span_q4_avx2(const std::uint8_t* x, const std::uint8_t* y,
                         std::size_t n) {
  const __m256i three = _mm256_set1_epi8(3);
  std::int64_t c0 = 0, c1 = 0, c2 = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i d = _mm256_and_si256(_mm256_sub_epi8(vx, vy), three);
    c0 += __builtin_popcount(static_cast<unsigned>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi8(d, _mm256_setzero_si256()))));
    c1 += __builtin_popcount(static_cast<unsigned>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi8(d, _mm256_set1_epi8(1)))));
    c2 += __builtin_popcount(static_cast<unsigned>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi8(d, _mm256_set1_epi8(2)))));
  }
  std::int64_t c3 = static_cast<std::int64_t>(i) - c0 - c1 - c2;
  std::int64_t tc[4] = {0, 0, 0, 0};
  for (; i < n; ++i) ++tc[static_cast<std::uint8_t>(x[i] - y[i]) & 3];
  return {c0 + tc[0] - c2 - tc[2], c1 + tc[1] - c3 - tc[3]};
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{"avx2", span_q2_avx2, span_q4_avx2};
  return k;
}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

}  // namespace gcz::kern

#endif  // GCZ_HAVE_AVX2
