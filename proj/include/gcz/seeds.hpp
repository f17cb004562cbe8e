#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcz/array.hpp"

namespace gcz {

// A known complementary pair usable as a construction seed. Provenance is
// one of "published", "doubling", "search".
struct SeedRecord {
  std::string id;
  std::string provenance;
  std::string notes;
  ArrayPair pair;
};

// The built-in seed catalog. Every entry is re-verified to be complementary
// on first access; ids are stable strings like "binary-10".
const std::vector<SeedRecord>& catalog();

// Look up a catalog entry by id.
std::optional<SeedRecord> find_seed(const std::string& id);

// Classical doubling (a || b, a || -b): turns a length-N complementary pair
// into a length-2N one. The seed is verified first.
ArrayPair golay_double(const ArrayPair& pair);

struct SearchOptions {
  // Stop after this many pairs (all of them when absent).
  std::optional<std::size_t> limit;
  // Guard on the candidate-pair count q^(2N); raise to search further.
  std::uint64_t max_candidates = std::uint64_t(1) << 32;
  // Worker threads; 0 means hardware concurrency.
  unsigned workers = 0;
};

// Exhaustive search for complementary pairs of a given length and alphabet,
// enumerated in lexicographic exponent order over (first, second). The
// complementarity test is an independent direct evaluation, not the
// optimized kernels. Deterministic for fixed inputs regardless of worker
// count.
std::vector<ArrayPair> brute_force_search(int length, std::int64_t q,
                                          const SearchOptions& options = {});

}  // namespace gcz
