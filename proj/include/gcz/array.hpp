#pragma once

#include <cstdint>
#include <vector>

#include "gcz/value.hpp"

namespace gcz {

// An L1 x L2 array whose entries are q-th roots of unity, stored as integer
// exponents in [0, q). A sequence is the L1 = 1 case; there is no separate
// sequence type. Instances are immutable values after construction: all
// transforms return new arrays.
class UnimodularArray {
 public:
  UnimodularArray(std::int64_t q, int rows, int cols,
                  std::vector<std::int32_t> exponents);

  static UnimodularArray sequence(std::int64_t q,
                                  const std::vector<std::int32_t>& exponents);

  std::int64_t q() const { return q_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t size() const { return static_cast<std::int64_t>(rows_) * cols_; }

  std::int32_t exponent(int i, int j) const { return exp_[idx(i, j)]; }
  const std::vector<std::int32_t>& exponents() const { return exp_; }

  ComplexValue value(int i, int j) const {
    return ComplexValue::root_of_unity(q_, exponent(i, j));
  }

  bool same_shape(const UnimodularArray& o) const {
    return q_ == o.q_ && rows_ == o.rows_ && cols_ == o.cols_;
  }
  bool operator==(const UnimodularArray& o) const {
    return same_shape(o) && exp_ == o.exp_;
  }

  // True when -1 belongs to the alphabet (q even). q = 1 arrays are handled
  // by promotion instead, see promote_alphabet.
  bool negation_closed() const { return q_ % 2 == 0; }

 private:
  int idx(int i, int j) const { return i * cols_ + j; }

  std::int64_t q_;
  int rows_, cols_;
  std::vector<std::int32_t> exp_;
};

struct ArrayPair {
  UnimodularArray first;
  UnimodularArray second;

  ArrayPair(UnimodularArray a, UnimodularArray b);

  bool operator==(const ArrayPair& o) const {
    return first == o.first && second == o.second;
  }
};

// Re-express A over a finer alphabet new_q (old q must divide new_q).
// Entry values are unchanged; exponents are rescaled exactly.
UnimodularArray promote_alphabet(const UnimodularArray& a, std::int64_t new_q);

// Entrywise multiplication by -1. q = 1 inputs are promoted to q = 2 so the
// result stays representable; odd q > 1 is an alphabet-closure error.
UnimodularArray negate(const UnimodularArray& a);

// output[i][j] = input[L1-1-i][L2-1-j].
UnimodularArray reverse_all_dims(const UnimodularArray& a);

// Entrywise complex conjugate: exponent e -> (q - e) mod q.
UnimodularArray conjugate(const UnimodularArray& a);

// Horizontal concatenation of sign-scaled blocks. All blocks must share
// (q, rows); signs are +1 or -1.
UnimodularArray concat_cols(
    const std::vector<std::pair<int, UnimodularArray>>& blocks);

// An R x C grid of +-1 signs together with a layout that assigns each cell
// to the first or second array of a pair ('A' or 'B').
struct SignMatrix {
  int rows = 0, cols = 0;
  std::vector<int> sign;     // row-major, +1 or -1
  std::vector<char> layout;  // row-major, 'A' or 'B'

  int sign_at(int r, int c) const { return sign[r * cols + c]; }
  char layout_at(int r, int c) const { return layout[r * cols + c]; }
};

// Tile a (R*L1) x (C*L2) array: cell (r, c) holds sign[r][c] * layout[r][c],
// where the layout picks A or B.
UnimodularArray block_compose(const SignMatrix& pattern,
                              const UnimodularArray& a,
                              const UnimodularArray& b);

}  // namespace gcz
