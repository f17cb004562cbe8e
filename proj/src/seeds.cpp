#include "gcz/seeds.hpp"

#include "gcz/error.hpp"
#include "gcz/verify.hpp"

namespace gcz {
namespace {

SeedRecord make_seed(std::string id, std::string provenance, std::string notes,
                     std::int64_t q, int rows, int cols,
                     std::vector<std::int32_t> a, std::vector<std::int32_t> b) {
  return SeedRecord{std::move(id), std::move(provenance), std::move(notes),
                    ArrayPair(UnimodularArray(q, rows, cols, std::move(a)),
                              UnimodularArray(q, rows, cols, std::move(b)))};
}

std::vector<SeedRecord> build_catalog() {
  std::vector<SeedRecord> v;
  v.push_back(make_seed("binary-2", "doubling",
                        "doubling of the trivial length-1 pair", 2, 1, 2,
                        {0, 0}, {0, 1}));
  v.push_back(make_seed("binary-4", "search",
                        "first hit of the exhaustive length-4 binary search",
                        2, 1, 4, {0, 0, 0, 1}, {0, 0, 1, 0}));
  v.push_back(make_seed("binary-8", "search",
                        "first hit of the exhaustive length-8 binary search",
                        2, 1, 8, {0, 0, 0, 0, 0, 1, 1, 0},
                        {0, 0, 1, 1, 0, 1, 0, 1}));
  v.push_back(make_seed("binary-10", "published",
                        "classical binary pair of length 10", 2, 1, 10,
                        {0, 0, 1, 0, 0, 0, 0, 0, 1, 1},
                        {0, 0, 1, 0, 1, 0, 1, 1, 0, 0}));
  v.push_back(make_seed("quadriphase-3", "published",
                        "quadriphase pair of length 3", 4, 1, 3, {0, 0, 2},
                        {0, 1, 0}));
  v.push_back(make_seed("quaternary-2x3", "published",
                        "quaternary 2x3 array pair", 4, 2, 3,
                        {0, 0, 2, 2, 3, 2}, {0, 0, 2, 0, 1, 0}));
  for (const auto& s : v)
    if (!is_gcap(s.pair).ok)
      throw Error(ErrorCode::bad_input,
                  "catalog entry " + s.id + " failed the complementarity check");
  return v;
}

}  // namespace

const std::vector<SeedRecord>& catalog() {
  static const std::vector<SeedRecord> v = build_catalog();
  return v;
}

std::optional<SeedRecord> find_seed(const std::string& id) {
  for (const auto& s : catalog())
    if (s.id == id) return s;
  return std::nullopt;
}

ArrayPair golay_double(const ArrayPair& pair) {
  CheckResult r = is_gcap(pair);
  if (!r.ok)
    throw Error(ErrorCode::seed_rejected,
                "doubling seed is not a complementary pair");
  UnimodularArray a = concat_cols({{1, pair.first}, {1, pair.second}});
  UnimodularArray b = concat_cols({{1, pair.first}, {-1, pair.second}});
  // Negating a q = 1 block promotes the second member to q = 2.
  if (a.q() != b.q()) {
    std::int64_t q = std::max(a.q(), b.q());
    a = promote_alphabet(a, q);
    b = promote_alphabet(b, q);
  }
  return ArrayPair(std::move(a), std::move(b));
}

}  // namespace gcz
