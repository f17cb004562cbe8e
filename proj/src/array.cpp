#include "gcz/array.hpp"

#include <string>

#include "gcz/error.hpp"

namespace gcz {

UnimodularArray::UnimodularArray(std::int64_t q, int rows, int cols,
                                 std::vector<std::int32_t> exponents)
    : q_(q), rows_(rows), cols_(cols), exp_(std::move(exponents)) {
  if (q < 1) throw Error(ErrorCode::bad_input, "alphabet order must be >= 1");
  if (rows < 1 || cols < 1)
    throw Error(ErrorCode::bad_input, "array dimensions must be >= 1");
  if (static_cast<std::int64_t>(exp_.size()) != size())
    throw Error(ErrorCode::bad_input, "exponent count does not match shape");
  for (std::int32_t e : exp_)
    if (e < 0 || e >= q)
      throw Error(ErrorCode::bad_input,
                  "exponent " + std::to_string(e) + " outside [0, " +
                      std::to_string(q) + ")");
}

UnimodularArray UnimodularArray::sequence(
    std::int64_t q, const std::vector<std::int32_t>& exponents) {
  return UnimodularArray(q, 1, static_cast<int>(exponents.size()), exponents);
}

ArrayPair::ArrayPair(UnimodularArray a, UnimodularArray b)
    : first(std::move(a)), second(std::move(b)) {
  if (!first.same_shape(second))
    throw Error(ErrorCode::shape_mismatch,
                "pair members must share alphabet and shape");
}

UnimodularArray promote_alphabet(const UnimodularArray& a, std::int64_t new_q) {
  if (new_q % a.q() != 0)
    throw Error(ErrorCode::bad_input,
                "alphabet order " + std::to_string(a.q()) +
                    " does not divide " + std::to_string(new_q));
  std::int64_t scale = new_q / a.q();
  std::vector<std::int32_t> e(a.exponents());
  for (auto& x : e) x = static_cast<std::int32_t>(x * scale);
  return UnimodularArray(new_q, a.rows(), a.cols(), std::move(e));
}

UnimodularArray negate(const UnimodularArray& a) {
  if (a.q() == 1) return negate(promote_alphabet(a, 2));
  if (a.q() % 2 != 0)
    throw Error(ErrorCode::alphabet_closure,
                "-1 is not a root of unity of odd order " +
                    std::to_string(a.q()));
  std::int64_t half = a.q() / 2;
  std::vector<std::int32_t> e(a.exponents());
  for (auto& x : e) x = static_cast<std::int32_t>((x + half) % a.q());
  return UnimodularArray(a.q(), a.rows(), a.cols(), std::move(e));
}

UnimodularArray reverse_all_dims(const UnimodularArray& a) {
  std::vector<std::int32_t> e(a.exponents().size());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      e[i * a.cols() + j] = a.exponent(a.rows() - 1 - i, a.cols() - 1 - j);
  return UnimodularArray(a.q(), a.rows(), a.cols(), std::move(e));
}

UnimodularArray conjugate(const UnimodularArray& a) {
  std::vector<std::int32_t> e(a.exponents());
  for (auto& x : e) x = static_cast<std::int32_t>((a.q() - x) % a.q());
  return UnimodularArray(a.q(), a.rows(), a.cols(), std::move(e));
}

namespace {

UnimodularArray apply_sign(int sign, const UnimodularArray& a) {
  if (sign == 1) return a;
  if (sign == -1) return negate(a);
  throw Error(ErrorCode::bad_input, "signs must be +1 or -1");
}

}  // namespace

UnimodularArray concat_cols(
    const std::vector<std::pair<int, UnimodularArray>>& blocks) {
  if (blocks.empty())
    throw Error(ErrorCode::bad_input, "cannot concatenate zero blocks");

  std::vector<UnimodularArray> scaled;
  scaled.reserve(blocks.size());
  for (const auto& [sign, block] : blocks)
    scaled.push_back(apply_sign(sign, block));

  // negate() may promote q = 1 blocks to q = 2; bring the rest along.
  std::int64_t q = 1;
  for (const auto& s : scaled) q = std::max(q, s.q());
  int rows = scaled.front().rows();
  int cols = 0;
  for (auto& s : scaled) {
    if (s.q() != q) s = promote_alphabet(s, q);
    if (s.rows() != rows || s.q() != q)
      throw Error(ErrorCode::shape_mismatch,
                  "concatenated blocks must share alphabet and row count");
    cols += s.cols();
  }

  std::vector<std::int32_t> e(static_cast<std::size_t>(rows) * cols);
  int at = 0;
  for (const auto& s : scaled) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < s.cols(); ++j)
        e[static_cast<std::size_t>(i) * cols + at + j] = s.exponent(i, j);
    at += s.cols();
  }
  return UnimodularArray(q, rows, cols, std::move(e));
}

UnimodularArray block_compose(const SignMatrix& pattern,
                              const UnimodularArray& a,
                              const UnimodularArray& b) {
  if (!a.same_shape(b))
    throw Error(ErrorCode::shape_mismatch,
                "block composition needs same-shape arrays");
  if (pattern.rows < 1 || pattern.cols < 1 ||
      pattern.sign.size() != static_cast<std::size_t>(pattern.rows) * pattern.cols ||
      pattern.layout.size() != pattern.sign.size())
    throw Error(ErrorCode::bad_input, "malformed sign pattern");

  // Compose one grid row at a time, then stack the rows.
  std::vector<UnimodularArray> strips;
  strips.reserve(pattern.rows);
  for (int r = 0; r < pattern.rows; ++r) {
    std::vector<std::pair<int, UnimodularArray>> row;
    row.reserve(pattern.cols);
    for (int c = 0; c < pattern.cols; ++c) {
      char which = pattern.layout_at(r, c);
      if (which != 'A' && which != 'B')
        throw Error(ErrorCode::bad_input, "layout cells must be 'A' or 'B'");
      row.emplace_back(pattern.sign_at(r, c), which == 'A' ? a : b);
    }
    strips.push_back(concat_cols(row));
  }

  std::int64_t q = 1;
  for (const auto& s : strips) q = std::max(q, s.q());
  for (auto& s : strips)
    if (s.q() != q) s = promote_alphabet(s, q);

  int rows = pattern.rows * a.rows();
  int cols = strips.front().cols();
  std::vector<std::int32_t> e(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < pattern.rows; ++r)
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < cols; ++j)
        e[static_cast<std::size_t>(r * a.rows() + i) * cols + j] =
            strips[r].exponent(i, j);
  return UnimodularArray(q, rows, cols, std::move(e));
}

}  // namespace gcz
