#include "gcz/fft.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

namespace gcz::fft {
namespace {

using cd = std::complex<double>;

bool power_of_two(std::size_t n) { return n && (n & (n - 1)) == 0; }

// Iterative Cooley-Tukey for power-of-two sizes.
void radix2(std::vector<cd>& v, bool inverse) {
  const std::size_t n = v.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * M_PI / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const cd wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cd w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cd u = v[i + k];
        cd t = v[i + k + len / 2] * w;
        v[i + k] = u + t;
        v[i + k + len / 2] = u - t;
        w *= wlen;
      }
    }
  }
  if (inverse)
    for (auto& x : v) x /= static_cast<double>(n);
}

// exp(s * i * pi * k^2 / n) with k^2 reduced mod 2n to keep the angle small.
cd chirp(std::int64_t k, std::int64_t n, double s) {
  std::int64_t k2 = (k * k) % (2 * n);
  double ang = s * M_PI * static_cast<double>(k2) / static_cast<double>(n);
  return {std::cos(ang), std::sin(ang)};
}

// Bluestein's algorithm: an arbitrary-length DFT as one cyclic convolution
// of power-of-two size.
void bluestein(std::vector<cd>& v, bool inverse) {
  if (inverse) {
    for (auto& x : v) x = std::conj(x);
    bluestein(v, false);
    const double n = static_cast<double>(v.size());
    for (auto& x : v) x = std::conj(x) / n;
    return;
  }
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  std::size_t m = 1;
  while (m < static_cast<std::size_t>(2 * n - 1)) m <<= 1;

  std::vector<cd> a(m, cd(0.0, 0.0)), b(m, cd(0.0, 0.0));
  for (std::int64_t j = 0; j < n; ++j) {
    cd w = chirp(j, n, 1.0);
    a[j] = v[j] * std::conj(w);
    b[j] = w;
    if (j) b[m - j] = w;
  }
  radix2(a, false);
  radix2(b, false);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  radix2(a, true);
  for (std::int64_t k = 0; k < n; ++k) v[k] = a[k] * std::conj(chirp(k, n, 1.0));
}

}  // namespace

void transform(std::vector<cd>& v, bool inverse) {
  if (v.size() <= 1) return;
  if (power_of_two(v.size()))
    radix2(v, inverse);
  else
    bluestein(v, inverse);
}

void transform_2d(std::vector<cd>& v, int rows, int cols, bool inverse) {
  std::vector<cd> row(cols), col(rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) row[j] = v[static_cast<std::size_t>(i) * cols + j];
    transform(row, inverse);
    for (int j = 0; j < cols; ++j) v[static_cast<std::size_t>(i) * cols + j] = row[j];
  }
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) col[i] = v[static_cast<std::size_t>(i) * cols + j];
    transform(col, inverse);
    for (int i = 0; i < rows; ++i) v[static_cast<std::size_t>(i) * cols + j] = col[i];
  }
}

}  // namespace gcz::fft
