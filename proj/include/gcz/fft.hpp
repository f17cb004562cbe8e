#pragma once

#include <complex>
#include <vector>

namespace gcz::fft {

// In-place forward or inverse DFT of arbitrary length: radix-2 for powers of
// two, Bluestein's chirp transform otherwise. The inverse includes the 1/n
// factor. No global state; safe to call from multiple threads.
void transform(std::vector<std::complex<double>>& v, bool inverse);

// Row-column 2D DFT over a row-major rows x cols buffer.
void transform_2d(std::vector<std::complex<double>>& v, int rows, int cols,
                  bool inverse);

}  // namespace gcz::fft
