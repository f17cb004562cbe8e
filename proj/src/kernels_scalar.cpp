#include "gcz/kernels.hpp"

namespace gcz::kern {
namespace {

std::int64_t span_q2_scalar(const std::uint8_t* x, const std::uint8_t* y,
                            std::size_t n) {
  std::int64_t matches = 0;
  for (std::size_t i = 0; i < n; ++i) matches += (x[i] == y[i]);
  return 2 * matches - static_cast<std::int64_t>(n);
}

GaussianSum span_q4_scalar(const std::uint8_t* x, const std::uint8_t* y,
                           std::size_t n) {
  std::int64_t c[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < n; ++i)
    ++c[static_cast<std::uint8_t>(x[i] - y[i]) & 3];
  return {c[0] - c[2], c[1] - c[3]};
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", span_q2_scalar, span_q4_scalar};
  return k;
}

}  // namespace gcz::kern
