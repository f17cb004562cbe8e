// Acceptance gate: one PASS/FAIL line per criterion, each checked against
// its wall-clock budget. The process exit code is the number of failed
// criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "gcz/construct.hpp"
#include "gcz/correlation.hpp"
#include "gcz/seeds.hpp"
#include "gcz/verify.hpp"
#include "oracle.hpp"

using namespace gcz;

namespace {

struct Gate {
  int number;
  std::string name;
  double budget_s;  // 0 = no budget
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    notes.push_back(what);
  }
};

int finish(Gate& g, double elapsed_s) {
  if (g.budget_s > 0.0 && elapsed_s > g.budget_s)
    g.require(false, "runtime " + std::to_string(elapsed_s) + "s over the " +
                         std::to_string(g.budget_s) + "s budget");
  char timing[64];
  if (g.budget_s > 0.0)
    std::snprintf(timing, sizeof timing, "  [%.3fs of %.0fs]", elapsed_s,
                  g.budget_s);
  else
    std::snprintf(timing, sizeof timing, "  [%.3fs]", elapsed_s);
  std::cout << (g.ok ? "PASS" : "FAIL") << " " << g.number << ": " << g.name
            << timing << "\n";
  for (const auto& n : g.notes) std::cout << "        - " << n << "\n";
  return g.ok ? 0 : 1;
}

// Criterion 6 is fed by the others: every exact table they produce is
// audited for conjugate symmetry on the spot.
struct SymmetryAudit {
  long checked = 0;
  long failed = 0;

  void auto_table(const CorrelationTable& t) {
    if (!t.exact()) return;
    ++checked;
    if (!conjugate_symmetric(t)) ++failed;
  }
  void cross_tables(const CorrelationTable& ab, const CorrelationTable& ba) {
    if (!ab.exact() || !ba.exact()) return;
    ++checked;
    if (!conjugate_symmetric_pair(ab, ba)) ++failed;
  }
};

ComplexValue gauss(std::int64_t re, std::int64_t im) {
  return ComplexValue::exact_value(re, im);
}

bool row_equals(const CorrelationTable& t, const std::vector<ComplexValue>& want) {
  if (!t.exact()) return false;
  if (t.tau1_count() != 1 || t.tau2_count() != static_cast<int>(want.size()))
    return false;
  for (int tau = 0; tau < static_cast<int>(want.size()); ++tau)
    if (!t.at(t.tau1_min(), t.tau2_min() + tau).equals(want[tau])) return false;
  return true;
}

std::vector<ComplexValue> real_row(const std::vector<int>& re) {
  std::vector<ComplexValue> v;
  v.reserve(re.size());
  for (int r : re) v.push_back(gauss(r, 0));
  return v;
}

int criterion_1(SymmetryAudit& sym) {
  Gate g{1, "length-40 binary construction matches the reference tables, z_min 11", 1.0};
  auto t0 = std::chrono::steady_clock::now();

  ArrayPair pair = construct_1d(find_seed("binary-10")->pair, {1, 1, 1, -1});
  g.require(pair.first.cols() == 40, "output length is 40");

  CorrelationTable rp = periodic_xcorr(pair.first, pair.first);
  CorrelationTable rq = periodic_xcorr(pair.second, pair.second);
  CorrelationTable rpq = periodic_xcorr(pair.first, pair.second);

  std::vector<int> rp_want = {40, 0, 0, 0, 0,  0, 0, 0, 0,  0,  0, -4, -8, 4,
                              8,  -4, 0, 4, 0, 12, 0, 12, 0, 4,  0, -4, 8,  4,
                              -8, -4, 0, 0, 0, 0,  0, 0,  0, 0,  0, 0};
  std::vector<int> rq_want = rp_want;
  for (std::size_t i = 1; i < rq_want.size(); ++i) rq_want[i] = -rq_want[i];
  std::vector<int> rpq_want = {0, 0, 0,  0,  0, 0,  0, 0,  0,  0, 0,  -4, -8, 4,
                               16, 4, 0,  4, -8, -4, 0, 4,  -8, 12, 0, 12, 0,
                               -4, 8, 4,  0,  0, 0,  0, 0,  0,  0, 0,  0,  0};

  g.require(row_equals(rp, real_row(rp_want)), "first autocorrelation row");
  g.require(row_equals(rq, real_row(rq_want)), "second autocorrelation row");
  g.require(row_equals(rpq, real_row(rpq_want)), "cross-correlation row");

  ZczReport rep = measure_zones(pair);
  g.require(rep.is_gcap, "pair is complementary");
  g.require(rep.z_min1 == 1 && rep.z_min2 == 11, "measured z_min is 11");

  sym.auto_table(rp);
  sym.auto_table(rq);
  sym.auto_table(aacs(pair));
  sym.cross_tables(rpq, periodic_xcorr(pair.second, pair.first));

  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, dt);
}

int criterion_2(SymmetryAudit& sym) {
  Gate g{2, "length-12 quadriphase construction matches the reference tables, z_min 4", 1.0};
  auto t0 = std::chrono::steady_clock::now();

  ArrayPair pair = construct_1d(find_seed("quadriphase-3")->pair, {1, 1, 1, -1});
  g.require(pair.first.cols() == 12 && pair.first.q() == 4, "output is a quadriphase 12-sequence");

  CorrelationTable rp = periodic_xcorr(pair.first, pair.first);
  CorrelationTable rq = periodic_xcorr(pair.second, pair.second);
  CorrelationTable rpq = periodic_xcorr(pair.first, pair.second);

  g.require(row_equals(rp, real_row({12, 0, 0, 0, -4, 0, 0, 0, -4, 0, 0, 0})),
            "first autocorrelation row");
  g.require(row_equals(rq, real_row({12, 0, 0, 0, 4, 0, 0, 0, 4, 0, 0, 0})),
            "second autocorrelation row");
  g.require(row_equals(rpq, {gauss(0, 0), gauss(0, 0), gauss(0, 0), gauss(0, 0),
                             gauss(-4, 0), gauss(4, -4), gauss(0, 4), gauss(4, 4),
                             gauss(4, 0), gauss(0, 0), gauss(0, 0), gauss(0, 0)}),
            "cross-correlation row");

  ZczReport rep = measure_zones(pair);
  g.require(rep.is_gcap, "pair is complementary");
  g.require(rep.z_min1 == 1 && rep.z_min2 == 4, "measured z_min is 4");

  sym.auto_table(rp);
  sym.auto_table(rq);
  sym.auto_table(aacs(pair));
  sym.cross_tables(rpq, periodic_xcorr(pair.second, pair.first));

  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, dt);
}

int criterion_3(SymmetryAudit& sym) {
  Gate g{3, "2x12 and 8x12 array constructions hold their claimed zones", 5.0};
  auto t0 = std::chrono::steady_clock::now();

  ArrayPair seed = find_seed("quaternary-2x3")->pair;

  ArrayPair h = construct_2d_horizontal(seed, {1, 1, 1, -1});
  g.require(h.first.rows() == 2 && h.first.cols() == 12, "horizontal output is 2 x 12");
  CheckResult hc = is_gcap(h);
  g.require(hc.ok && aacs(h).exact(), "2 x 12 pair is complementary, checked exactly");
  ClaimResult hclaim = verify_claim(h, 2, 4);
  g.require(hclaim.ok, "2 x 12 pair holds the 2 x 4 zone");
  g.require(hclaim.report.z_min1 >= 2 && hclaim.report.z_min2 >= 4,
            "2 x 12 measured zone dominates 2 x 4");

  ArrayPair f = construct_2d_full(seed);
  g.require(f.first.rows() == 8 && f.first.cols() == 12, "full output is 8 x 12");
  CheckResult fc = is_gcap(f);
  g.require(fc.ok && aacs(f).exact(), "8 x 12 pair is complementary, checked exactly");
  ClaimResult fclaim = verify_claim(f, 3, 4);
  g.require(fclaim.ok, "8 x 12 pair holds the 3 x 4 zone");
  g.require(fclaim.report.z_min1 >= 3 && fclaim.report.z_min2 >= 4,
            "8 x 12 measured zone dominates 3 x 4");

  for (const ArrayPair& p : {h, f}) {
    sym.auto_table(periodic_xcorr(p.first, p.first));
    sym.auto_table(periodic_xcorr(p.second, p.second));
    sym.auto_table(aacs(p));
    sym.cross_tables(periodic_xcorr(p.first, p.second),
                     periodic_xcorr(p.second, p.first));
  }

  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, dt);
}

int criterion_4(SymmetryAudit& sym) {
  Gate g{4, "every catalog seed under all sign quadruples meets its zone bound", 30.0};
  auto t0 = std::chrono::steady_clock::now();

  const auto quads = enumerate_valid_sign_quadruples();
  g.require(quads.size() == 8, "eight valid sign quadruples");

  for (const SeedRecord& seed : catalog()) {
    if (seed.pair.first.rows() != 1) continue;
    const int n = seed.pair.first.cols();
    for (const SignQuadruple& s : quads) {
      ArrayPair out = construct_1d(seed.pair, s);
      ClaimResult res = verify_claim(out, 1, n + 1);
      g.require(res.report.is_gcap,
                seed.id + " quadruple output is complementary");
      g.require(res.ok && res.report.z_min2 >= n + 1,
                seed.id + " z_min reaches seed length + 1");
      sym.auto_table(aacs(out));
      sym.cross_tables(periodic_xcorr(out.first, out.second),
                       periodic_xcorr(out.second, out.first));
    }
  }

  ArrayPair seed2 = find_seed("quaternary-2x3")->pair;
  for (const SignQuadruple& s : quads) {
    ArrayPair h = construct_2d_horizontal(seed2, s);
    ClaimResult res = verify_claim(h, 2, 4);
    g.require(res.report.is_gcap, "2 x 12 quadruple output is complementary");
    g.require(res.ok, "2 x 12 quadruple output holds the 2 x 4 zone");
    sym.auto_table(aacs(h));
  }
  ClaimResult full = verify_claim(construct_2d_full(seed2), 3, 4);
  g.require(full.report.is_gcap && full.ok, "8 x 12 output holds the 3 x 4 zone");

  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, dt);
}

int criterion_5(SymmetryAudit& sym) {
  Gate g{5, "naive, exact and FFT correlation engines agree on 1000 random arrays", 60.0};
  auto t0 = std::chrono::steady_clock::now();

  std::mt19937 rng(20260817u);
  double worst_fft = 0.0;
  bool naive_ok = true, fft_ok = true;

  for (int iter = 0; iter < 1000; ++iter) {
    int rows = 1, cols = 0;
    if (iter % 2 == 0) {
      cols = 1 + static_cast<int>(rng() % 64);
    } else {
      rows = 1 + static_cast<int>(rng() % 16);
      cols = 1 + static_cast<int>(rng() % 16);
    }
    const std::int64_t q = (rng() % 2 == 0) ? 2 : 4;
    UnimodularArray a = oracle::random_array(rng, q, rows, cols);
    UnimodularArray b = oracle::random_array(rng, q, rows, cols);

    CorrelationTable paa = periodic_xcorr(a, a);
    CorrelationTable pab = periodic_xcorr(a, b);
    CorrelationTable cab = aperiodic_xcorr(a, b);
    naive_ok = naive_ok && oracle::matches_exact(paa, oracle::periodic_exact(a, a));
    naive_ok = naive_ok && oracle::matches_exact(pab, oracle::periodic_exact(a, b));
    naive_ok = naive_ok && oracle::matches_exact(cab, oracle::aperiodic_exact(a, b));

    CorrelationTable fp = periodic_xcorr_fft(a, b);
    CorrelationTable fa = aperiodic_xcorr_fft(a, b);
    for (int t1 = pab.tau1_min(); t1 <= pab.tau1_max(); ++t1)
      for (int t2 = pab.tau2_min(); t2 <= pab.tau2_max(); ++t2)
        worst_fft = std::max(worst_fft,
                             std::abs(fp.at(t1, t2).as_complex() -
                                      pab.at(t1, t2).as_complex()));
    for (int t1 = cab.tau1_min(); t1 <= cab.tau1_max(); ++t1)
      for (int t2 = cab.tau2_min(); t2 <= cab.tau2_max(); ++t2)
        worst_fft = std::max(worst_fft,
                             std::abs(fa.at(t1, t2).as_complex() -
                                      cab.at(t1, t2).as_complex()));
    fft_ok = fft_ok && worst_fft <= 1e-9;

    sym.auto_table(paa);
    sym.cross_tables(pab, periodic_xcorr(b, a));
    sym.cross_tables(cab, aperiodic_xcorr(b, a));
  }

  g.require(naive_ok, "exact engine equals the naive reference integer for integer");
  g.require(fft_ok, "FFT engine within 1e-9 (worst " + std::to_string(worst_fft) + ")");

  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, dt);
}

int criterion_6(const SymmetryAudit& sym) {
  Gate g{6, "conjugate symmetry holds exactly on every exact table above", 0.0};
  auto t0 = std::chrono::steady_clock::now();
  g.require(sym.checked > 0, "at least one exact table was audited");
  g.require(sym.failed == 0, std::to_string(sym.failed) + " of " +
                                 std::to_string(sym.checked) +
                                 " audited tables broke the symmetry");
  g.name += " (" + std::to_string(sym.checked) + " tables)";
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, dt);
}

int criterion_7() {
  Gate g{7, "exhaustive search reproduces its ground truths", 0.0};
  auto t0 = std::chrono::steady_clock::now();

  g.require(brute_force_search(3, 2).empty(), "no binary length-3 pairs exist");

  auto len2 = brute_force_search(2, 2);
  ArrayPair want(UnimodularArray::sequence(2, {0, 0}),
                 UnimodularArray::sequence(2, {0, 1}));
  g.require(std::find(len2.begin(), len2.end(), want) != len2.end(),
            "length-2 results contain ((1,1),(1,-1))");

  g.require(brute_force_search(4, 2).size() == 32,
            "binary length-4 pair count stays 32");

  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish(g, dt);
}

}  // namespace

int main() {
  int failures = 0;
  SymmetryAudit sym;
  failures += criterion_1(sym);
  failures += criterion_2(sym);
  failures += criterion_3(sym);
  failures += criterion_4(sym);
  failures += criterion_5(sym);
  failures += criterion_6(sym);
  failures += criterion_7();
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
