#pragma once

// Naive reference implementations used as independent oracles. Everything
// here recomputes correlation sums straight from the definitions with plain
// double loops; none of it calls the library's optimized paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gcz/array.hpp"
#include "gcz/correlation.hpp"

namespace oracle {

inline std::complex<double> entry(const gcz::UnimodularArray& a, int i, int j) {
  double ang = 2.0 * M_PI * static_cast<double>(a.exponent(i, j)) /
               static_cast<double>(a.q());
  return {std::cos(ang), std::sin(ang)};
}

// Floating-point correlation grid indexed by signed shifts.
struct Grid {
  int tau1_min = 0, tau2_min = 0;
  std::vector<std::vector<std::complex<double>>> v;

  const std::complex<double>& at(int t1, int t2) const {
    return v[static_cast<std::size_t>(t1 - tau1_min)]
            [static_cast<std::size_t>(t2 - tau2_min)];
  }
};

inline Grid periodic(const gcz::UnimodularArray& a,
                     const gcz::UnimodularArray& b) {
  const int L1 = a.rows(), L2 = a.cols();
  Grid g;
  g.v.assign(static_cast<std::size_t>(L1),
             std::vector<std::complex<double>>(static_cast<std::size_t>(L2)));
  for (int t1 = 0; t1 < L1; ++t1)
    for (int t2 = 0; t2 < L2; ++t2) {
      std::complex<double> s{0.0, 0.0};
      for (int i = 0; i < L1; ++i)
        for (int j = 0; j < L2; ++j)
          s += entry(a, i, j) *
               std::conj(entry(b, (i + t1) % L1, (j + t2) % L2));
      g.v[t1][t2] = s;
    }
  return g;
}

inline Grid aperiodic(const gcz::UnimodularArray& a,
                      const gcz::UnimodularArray& b) {
  const int L1 = a.rows(), L2 = a.cols();
  Grid g;
  g.tau1_min = 1 - L1;
  g.tau2_min = 1 - L2;
  g.v.assign(static_cast<std::size_t>(2 * L1 - 1),
             std::vector<std::complex<double>>(
                 static_cast<std::size_t>(2 * L2 - 1)));
  for (int t1 = 1 - L1; t1 <= L1 - 1; ++t1)
    for (int t2 = 1 - L2; t2 <= L2 - 1; ++t2) {
      std::complex<double> s{0.0, 0.0};
      for (int i = 0; i < L1; ++i)
        for (int j = 0; j < L2; ++j) {
          int bi = i + t1, bj = j + t2;
          if (bi < 0 || bi >= L1 || bj < 0 || bj >= L2) continue;
          s += entry(a, i, j) * std::conj(entry(b, bi, bj));
        }
      g.v[static_cast<std::size_t>(t1 - g.tau1_min)]
         [static_cast<std::size_t>(t2 - g.tau2_min)] = s;
    }
  return g;
}

// Exact Gaussian-integer grid; valid for q in {1, 2, 4} only, where every
// entry is a power of i and every product stays a Gaussian integer.
struct GaussGrid {
  int tau1_min = 0, tau2_min = 0;
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> v;

  const std::pair<std::int64_t, std::int64_t>& at(int t1, int t2) const {
    return v[static_cast<std::size_t>(t1 - tau1_min)]
            [static_cast<std::size_t>(t2 - tau2_min)];
  }
};

inline int unit_exponent(const gcz::UnimodularArray& a, int i, int j) {
  return static_cast<int>(a.exponent(i, j) * (4 / a.q()));  // onto i^k
}

inline void add_unit(std::pair<std::int64_t, std::int64_t>& acc, int k) {
  static constexpr std::int64_t re[4] = {1, 0, -1, 0};
  static constexpr std::int64_t im[4] = {0, 1, 0, -1};
  acc.first += re[((k % 4) + 4) % 4];
  acc.second += im[((k % 4) + 4) % 4];
}

inline GaussGrid periodic_exact(const gcz::UnimodularArray& a,
                                const gcz::UnimodularArray& b) {
  const int L1 = a.rows(), L2 = a.cols();
  GaussGrid g;
  g.v.assign(static_cast<std::size_t>(L1),
             std::vector<std::pair<std::int64_t, std::int64_t>>(
                 static_cast<std::size_t>(L2), {0, 0}));
  for (int t1 = 0; t1 < L1; ++t1)
    for (int t2 = 0; t2 < L2; ++t2)
      for (int i = 0; i < L1; ++i)
        for (int j = 0; j < L2; ++j)
          add_unit(g.v[t1][t2],
                   unit_exponent(a, i, j) -
                       unit_exponent(b, (i + t1) % L1, (j + t2) % L2));
  return g;
}

inline GaussGrid aperiodic_exact(const gcz::UnimodularArray& a,
                                 const gcz::UnimodularArray& b) {
  const int L1 = a.rows(), L2 = a.cols();
  GaussGrid g;
  g.tau1_min = 1 - L1;
  g.tau2_min = 1 - L2;
  g.v.assign(static_cast<std::size_t>(2 * L1 - 1),
             std::vector<std::pair<std::int64_t, std::int64_t>>(
                 static_cast<std::size_t>(2 * L2 - 1), {0, 0}));
  for (int t1 = 1 - L1; t1 <= L1 - 1; ++t1)
    for (int t2 = 1 - L2; t2 <= L2 - 1; ++t2)
      for (int i = 0; i < L1; ++i)
        for (int j = 0; j < L2; ++j) {
          int bi = i + t1, bj = j + t2;
          if (bi < 0 || bi >= L1 || bj < 0 || bj >= L2) continue;
          add_unit(g.v[static_cast<std::size_t>(t1 - g.tau1_min)]
                      [static_cast<std::size_t>(t2 - g.tau2_min)],
                   unit_exponent(a, i, j) - unit_exponent(b, bi, bj));
        }
  return g;
}

// Engine table vs. float oracle, every shift within tol.
inline bool matches_float(const gcz::CorrelationTable& t, const Grid& g,
                          double tol) {
  for (int t1 = t.tau1_min(); t1 <= t.tau1_max(); ++t1)
    for (int t2 = t.tau2_min(); t2 <= t.tau2_max(); ++t2) {
      std::complex<double> want = g.at(t1, t2);
      gcz::ComplexValue got = t.at(t1, t2);
      if (std::hypot(got.re - want.real(), got.im - want.imag()) > tol)
        return false;
    }
  return true;
}

// Engine table vs. exact oracle, integer-for-integer.
inline bool matches_exact(const gcz::CorrelationTable& t, const GaussGrid& g) {
  if (!t.exact()) return false;
  for (int t1 = t.tau1_min(); t1 <= t.tau1_max(); ++t1)
    for (int t2 = t.tau2_min(); t2 <= t.tau2_max(); ++t2) {
      auto [re, im] = g.at(t1, t2);
      gcz::ComplexValue got = t.at(t1, t2);
      if (got.re_n != re || got.im_n != im) return false;
    }
  return true;
}

inline gcz::UnimodularArray random_array(std::mt19937& rng, std::int64_t q,
                                         int rows, int cols) {
  std::uniform_int_distribution<std::int32_t> d(0, static_cast<std::int32_t>(q - 1));
  std::vector<std::int32_t> e(static_cast<std::size_t>(rows) * cols);
  for (auto& x : e) x = d(rng);
  return gcz::UnimodularArray(q, rows, cols, std::move(e));
}

}  // namespace oracle
