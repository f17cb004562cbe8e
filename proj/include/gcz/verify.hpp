#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcz/correlation.hpp"

namespace gcz {

// A shift at which a required zero failed, with the offending value.
struct Witness {
  int tau1 = 0, tau2 = 0;
  ComplexValue value;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness;
};

// True iff the aperiodic autocorrelation sum of the pair vanishes at every
// nonzero shift. On failure the first violating shift (row-major scan) is
// reported.
CheckResult is_gcap(const ArrayPair& pair);

// True iff C_{A,C} + C_{B,D} = 0 at every shift, including the origin,
// where (A, B) = p1 and (C, D) = p2.
CheckResult is_golay_mate(const ArrayPair& p1, const ArrayPair& p2);

// One measured zero zone of a periodic correlation table. Zones are
// origin-centred rectangles: widths (z1, z2) mean the correlation vanishes
// for all |tau1| < z1, |tau2| < z2 (the origin itself is excluded for
// autocorrelation, included for cross-correlation). rep is the maximal
// rectangle that maximizes dimension 1 first; frontier lists every maximal
// rectangle. Witnesses sit just outside the reported rectangle; a missing
// witness means that dimension is capped at the array period.
struct ZoneMeasure {
  int z1 = 0, z2 = 0;
  std::vector<std::pair<int, int>> frontier;
  std::optional<Witness> dim1_witness;
  std::optional<Witness> dim2_witness;
};

struct ZczReport {
  bool is_gcap = false;
  std::optional<Witness> gcap_witness;
  ZoneMeasure zacz_first;
  ZoneMeasure zacz_second;
  ZoneMeasure zccz;
  int z_min1 = 0, z_min2 = 0;  // per-dimension min over the three zones
  int rows = 0, cols = 0;
  std::int64_t q = 0;
  double tolerance = 0.0;  // zero threshold applied to inexact tables
};

// Measure the maximal periodic zero zones of a pair: the autocorrelation
// zone of each member (zeros at 0 < |tau| < z), the cross-correlation zone
// (zeros at |tau| < z including the origin), and their per-dimension
// minimum. tol_override replaces the default 1e-9 * L1 * L2 threshold for
// inexact tables; exact tables are tolerance-free.
ZczReport measure_zones(const ArrayPair& pair,
                        std::optional<double> tol_override = std::nullopt);

// Check a claimed zone rectangle (claim1, claim2) directly: both members'
// periodic autocorrelations must vanish on the claimed rectangle minus the
// origin and the cross-correlation on all of it. Claims are clamped to the
// period per dimension; a zero claim is vacuously true. The returned report
// carries the measured zones; on failure the witness explains which shift
// broke the claim.
struct ClaimResult {
  bool ok = true;
  std::optional<Witness> witness;
  std::string failed_condition;  // "auto-first", "auto-second" or "cross"
  ZczReport report;
};

ClaimResult verify_claim(const ArrayPair& pair, int claim1, int claim2,
                         std::optional<double> tol_override = std::nullopt);

}  // namespace gcz
