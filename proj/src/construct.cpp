#include "gcz/construct.hpp"

#include <numeric>
#include <string>

#include "gcz/error.hpp"
#include "gcz/verify.hpp"

namespace gcz {

std::vector<SignQuadruple> enumerate_valid_sign_quadruples() {
  std::vector<SignQuadruple> out;
  for (int x1 : {1, -1})
    for (int x2 : {1, -1})
      for (int x3 : {1, -1})
        for (int x4 : {1, -1}) {
          SignQuadruple s{x1, x2, x3, x4};
          if (s.valid()) out.push_back(s);
        }
  return out;
}

ArrayPair golay_mate(const ArrayPair& pair) {
  if (pair.first.q() == 1)
    return golay_mate(ArrayPair(promote_alphabet(pair.first, 2),
                                promote_alphabet(pair.second, 2)));
  return ArrayPair(reverse_all_dims(conjugate(pair.second)),
                   negate(reverse_all_dims(conjugate(pair.first))));
}

namespace {

std::string shift_text(const Witness& w) {
  return "(" + std::to_string(w.tau1) + ", " + std::to_string(w.tau2) + ")";
}

void require_valid_signs(const SignQuadruple& s) {
  if (!s.valid())
    throw Error(ErrorCode::invalid_signs,
                "sign quadruple must satisfy x1*x2 + x3*x4 = 0");
}

void require_complementary(const ArrayPair& pair, const char* what) {
  CheckResult r = is_gcap(pair);
  if (!r.ok)
    throw Error(ErrorCode::seed_rejected,
                std::string(what) + " is not a complementary pair; " +
                    "autocorrelation sum is nonzero at shift " +
                    shift_text(*r.witness));
}

ArrayPair promote_pair(const ArrayPair& p, std::int64_t q) {
  return ArrayPair(promote_alphabet(p.first, q),
                   promote_alphabet(p.second, q));
}

// Derive the mate via golay_mate, or verify a caller-supplied one.
ArrayPair resolve_mate(const ArrayPair& seed,
                       const std::optional<ArrayPair>& mate) {
  if (!mate.has_value()) return golay_mate(seed);
  std::int64_t q = std::lcm(seed.first.q(), mate->first.q());
  ArrayPair s = promote_pair(seed, q), m = promote_pair(*mate, q);
  if (!s.first.same_shape(m.first))
    throw Error(ErrorCode::shape_mismatch,
                "supplied mate must match the seed's shape");
  CheckResult r = is_golay_mate(s, m);
  if (!r.ok)
    throw Error(ErrorCode::seed_rejected,
                "supplied pair is not a mate of the seed; cross-correlation "
                "sum is nonzero at shift " +
                    shift_text(*r.witness));
  return m;
}

ArrayPair compose_horizontal(const ArrayPair& seed, const SignQuadruple& s,
                             const std::optional<ArrayPair>& mate) {
  require_valid_signs(s);
  require_complementary(seed, "seed");
  ArrayPair m = resolve_mate(seed, mate);
  std::int64_t q = std::lcm(seed.first.q(), m.first.q());
  ArrayPair sd = promote_pair(seed, q);
  m = promote_pair(m, q);
  const auto& a = sd.first;
  const auto& b = sd.second;
  const auto& c = m.first;
  const auto& d = m.second;
  return ArrayPair(
      concat_cols({{s.x1, a}, {s.x2, b}, {s.x3, a}, {s.x4, b}}),
      concat_cols({{s.x1, c}, {s.x2, d}, {s.x3, c}, {s.x4, d}}));
}

}  // namespace

ArrayPair construct_1d(const ArrayPair& seed, const SignQuadruple& signs,
                       const std::optional<ArrayPair>& mate) {
  if (seed.first.rows() != 1)
    throw Error(ErrorCode::bad_input,
                "construct_1d expects a single-row (sequence) seed");
  return compose_horizontal(seed, signs, mate);
}

ArrayPair construct_2d_horizontal(const ArrayPair& seed,
                                  const SignQuadruple& signs,
                                  const std::optional<ArrayPair>& mate) {
  return compose_horizontal(seed, signs, mate);
}

const SignMatrix& full_block_pattern() {
  static const SignMatrix pattern{
      4,
      4,
      {1, 1, 1, -1,
       1, 1, -1, 1,
       1, 1, 1, -1,
       -1, -1, 1, -1},
      {'A', 'B', 'A', 'B',
       'A', 'B', 'A', 'B',
       'A', 'B', 'A', 'B',
       'A', 'B', 'A', 'B'},
  };
  return pattern;
}

ArrayPair construct_2d_full(const ArrayPair& seed,
                            const std::optional<ArrayPair>& mate) {
  require_complementary(seed, "seed");
  ArrayPair m = resolve_mate(seed, mate);
  std::int64_t q = std::lcm(seed.first.q(), m.first.q());
  ArrayPair sd = promote_pair(seed, q);
  m = promote_pair(m, q);
  const SignMatrix& pat = full_block_pattern();
  return ArrayPair(block_compose(pat, sd.first, sd.second),
                   block_compose(pat, m.first, m.second));
}

}  // namespace gcz
