#pragma once

#include <optional>
#include <vector>

#include "gcz/array.hpp"

namespace gcz {

// The +-1 parameters (x1, x2, x3, x4) of the concatenation constructions.
// Valid iff x1*x2 + x3*x4 = 0.
struct SignQuadruple {
  int x1 = 1, x2 = 1, x3 = 1, x4 = 1;

  bool valid() const { return x1 * x2 + x3 * x4 == 0; }
  bool operator==(const SignQuadruple&) const = default;
};

// All 8 quadruples satisfying x1*x2 + x3*x4 = 0, in lexicographic order with
// +1 before -1.
std::vector<SignQuadruple> enumerate_valid_sign_quadruples();

// The mate of a complementary pair (A, B):
//   (reverse_all_dims(conjugate(B)), negate(reverse_all_dims(conjugate(A)))).
// Its defining property is C_{A,C} + C_{B,D} = 0 at every shift.
ArrayPair golay_mate(const ArrayPair& pair);

// From a length-N complementary seed pair (a, b) with L1 = 1, build the
// length-4N pair
//   p = x1*a || x2*b || x3*a || x4*b
//   q = x1*c || x2*d || x3*c || x4*d
// where (c, d) defaults to golay_mate(seed). A caller-supplied mate is
// verified against the mate property first. The seed itself is verified to
// be complementary; both checks fail fast.
ArrayPair construct_1d(const ArrayPair& seed, const SignQuadruple& signs,
                       const std::optional<ArrayPair>& mate = std::nullopt);

// 2D analogue of construct_1d: blocks are concatenated horizontally, giving
// an s1 x 4*s2 pair from an s1 x s2 seed. With s1 = 1 this reduces exactly
// to construct_1d.
ArrayPair construct_2d_horizontal(
    const ArrayPair& seed, const SignQuadruple& signs,
    const std::optional<ArrayPair>& mate = std::nullopt);

// The fixed 4 x 4 sign/layout pattern used by construct_2d_full. Columns
// alternate A, B, A, B; the signs are
//   + + + -
//   + + - +
//   + + + -
//   - - + -
const SignMatrix& full_block_pattern();

// Compose a 4*s1 x 4*s2 pair from an s1 x s2 complementary seed using
// full_block_pattern(), applying the same pattern to the mate for the
// second member. No sign freedom is exposed.
ArrayPair construct_2d_full(const ArrayPair& seed,
                            const std::optional<ArrayPair>& mate = std::nullopt);

}  // namespace gcz
