#include "gcz/verify.hpp"

#include <algorithm>
#include <limits>

#include "gcz/error.hpp"

namespace gcz {
namespace {

double table_tolerance(const CorrelationTable& t,
                       std::optional<double> tol_override) {
  if (t.exact()) return 0.0;
  return tol_override.value_or(zero_tolerance(t));
}

// Scan of one periodic table for its maximal origin-centred zero rectangle.
// include_origin distinguishes the cross-correlation zone (the origin must
// vanish too) from the autocorrelation zone (the peak is skipped).
ZoneMeasure scan_zone(const CorrelationTable& r, bool include_origin,
                      double tol) {
  const int L1 = r.rows(), L2 = r.cols();
  auto zero = [&](int t1, int t2) { return r.at(t1, t2).is_zero(tol); };

  ZoneMeasure zm;
  if (include_origin && !zero(0, 0)) {
    Witness w{0, 0, r.at(0, 0)};
    zm.dim1_witness = w;
    zm.dim2_witness = w;
    return zm;
  }

  // Largest Z such that row tau1 is zero for all |tau2| < Z.
  auto rowcap = [&](int t1) {
    int z = 0;
    for (int t2 = 0; t2 < L2; ++t2) {
      bool origin = (t1 == 0 && t2 == 0);
      if (origin && !include_origin) {
        z = 1;
        continue;
      }
      if (zero(t1, t2) && zero(t1, -t2))
        z = t2 + 1;
      else
        break;
    }
    return z;
  };

  // f(Z1) = max feasible Z2, nonincreasing in Z1.
  std::vector<int> f(static_cast<std::size_t>(L1) + 1, 0);
  int m = std::numeric_limits<int>::max();
  for (int z1 = 1; z1 <= L1; ++z1) {
    int cap = std::min(rowcap(z1 - 1), rowcap(-(z1 - 1)));
    m = std::min(m, cap);
    f[z1] = m;
    if (m == 0) break;
  }

  int best_z1 = 0;
  for (int z1 = 1; z1 <= L1; ++z1)
    if (f[z1] >= 1) best_z1 = z1;
  if (best_z1 == 0) {
    // Unreachable for autocorrelation zones; cross zones were handled above.
    return zm;
  }
  zm.z1 = best_z1;
  zm.z2 = f[best_z1];

  for (int z1 = 1; z1 <= best_z1; ++z1)
    if (z1 == best_z1 || f[z1] > f[z1 + 1]) zm.frontier.emplace_back(z1, f[z1]);

  if (zm.z2 < L2) {
    for (int t1 = -(zm.z1 - 1); t1 <= zm.z1 - 1 && !zm.dim2_witness; ++t1)
      for (int t2 : {zm.z2, -zm.z2})
        if (!zero(t1, t2)) {
          zm.dim2_witness = Witness{t1, t2, r.at(t1, t2)};
          break;
        }
  }
  if (zm.z1 < L1) {
    for (int t1 : {zm.z1, -zm.z1})
      if (!zero(t1, 0)) {
        zm.dim1_witness = Witness{t1, 0, r.at(t1, 0)};
        break;
      }
  }
  return zm;
}

// First nonzero shift of the claimed rectangle, row-major over the signed
// ranges.
std::optional<Witness> rectangle_violation(const CorrelationTable& r, int c1,
                                           int c2, bool include_origin,
                                           double tol) {
  for (int t1 = -(c1 - 1); t1 <= c1 - 1; ++t1)
    for (int t2 = -(c2 - 1); t2 <= c2 - 1; ++t2) {
      if (t1 == 0 && t2 == 0 && !include_origin) continue;
      if (!r.at(t1, t2).is_zero(tol)) return Witness{t1, t2, r.at(t1, t2)};
    }
  return std::nullopt;
}

}  // namespace

CheckResult is_gcap(const ArrayPair& pair) {
  CorrelationTable s = aacs(pair);
  double tol = s.exact() ? 0.0 : zero_tolerance(s);
  for (int t1 = s.tau1_min(); t1 <= s.tau1_max(); ++t1)
    for (int t2 = s.tau2_min(); t2 <= s.tau2_max(); ++t2) {
      if (t1 == 0 && t2 == 0) continue;
      if (!s.at(t1, t2).is_zero(tol))
        return {false, Witness{t1, t2, s.at(t1, t2)}};
    }
  return {true, std::nullopt};
}

CheckResult is_golay_mate(const ArrayPair& p1, const ArrayPair& p2) {
  if (p1.first.q() != p2.first.q() || p1.first.rows() != p2.first.rows() ||
      p1.first.cols() != p2.first.cols())
    throw Error(ErrorCode::shape_mismatch,
                "mate check needs four same-shape arrays");
  CorrelationTable s = aperiodic_xcorr(p1.first, p2.first)
                           .plus(aperiodic_xcorr(p1.second, p2.second));
  double tol = s.exact() ? 0.0 : zero_tolerance(s);
  for (int t1 = s.tau1_min(); t1 <= s.tau1_max(); ++t1)
    for (int t2 = s.tau2_min(); t2 <= s.tau2_max(); ++t2)
      if (!s.at(t1, t2).is_zero(tol))
        return {false, Witness{t1, t2, s.at(t1, t2)}};
  return {true, std::nullopt};
}

ZczReport measure_zones(const ArrayPair& pair,
                        std::optional<double> tol_override) {
  CorrelationTable rp = periodic_xcorr(pair.first, pair.first);
  CorrelationTable rq = periodic_xcorr(pair.second, pair.second);
  CorrelationTable rpq = periodic_xcorr(pair.first, pair.second);

  ZczReport rep;
  rep.rows = pair.first.rows();
  rep.cols = pair.first.cols();
  rep.q = pair.first.q();
  rep.tolerance = table_tolerance(rp, tol_override);

  CheckResult c1 = is_gcap(pair);
  rep.is_gcap = c1.ok;
  rep.gcap_witness = c1.witness;

  rep.zacz_first = scan_zone(rp, false, table_tolerance(rp, tol_override));
  rep.zacz_second = scan_zone(rq, false, table_tolerance(rq, tol_override));
  rep.zccz = scan_zone(rpq, true, table_tolerance(rpq, tol_override));

  rep.z_min1 = std::min({rep.zacz_first.z1, rep.zacz_second.z1, rep.zccz.z1});
  rep.z_min2 = std::min({rep.zacz_first.z2, rep.zacz_second.z2, rep.zccz.z2});
  return rep;
}

ClaimResult verify_claim(const ArrayPair& pair, int claim1, int claim2,
                         std::optional<double> tol_override) {
  ClaimResult out;
  out.report = measure_zones(pair, tol_override);
  if (claim1 <= 0 || claim2 <= 0) return out;

  const int c1 = std::min(claim1, pair.first.rows());
  const int c2 = std::min(claim2, pair.first.cols());

  struct Table {
    CorrelationTable t;
    bool include_origin;
    const char* name;
  };
  Table tables[] = {
      {periodic_xcorr(pair.first, pair.first), false, "auto-first"},
      {periodic_xcorr(pair.second, pair.second), false, "auto-second"},
      {periodic_xcorr(pair.first, pair.second), true, "cross"},
  };
  for (const auto& tb : tables) {
    auto w = rectangle_violation(tb.t, c1, c2, tb.include_origin,
                                 table_tolerance(tb.t, tol_override));
    if (w) {
      out.ok = false;
      out.witness = w;
      out.failed_condition = tb.name;
      return out;
    }
  }
  return out;
}

}  // namespace gcz
