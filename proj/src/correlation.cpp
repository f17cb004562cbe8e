#include "gcz/correlation.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>

#include "gcz/error.hpp"
#include "gcz/fft.hpp"
#include "gcz/kernels.hpp"

namespace gcz {

CorrelationTable::CorrelationTable(Kind kind, int rows, int cols, bool exact)
    : kind_(kind), rows_(rows), cols_(cols), exact_(exact) {
  std::size_t n =
      static_cast<std::size_t>(tau1_count()) * static_cast<std::size_t>(tau2_count());
  v_.assign(n, exact ? ComplexValue::exact_value(0, 0)
                     : ComplexValue::float_value(0.0, 0.0));
}

int CorrelationTable::index(int tau1, int tau2) const {
  if (kind_ == Kind::periodic) {
    int t1 = ((tau1 % rows_) + rows_) % rows_;
    int t2 = ((tau2 % cols_) + cols_) % cols_;
    return t1 * cols_ + t2;
  }
  return (tau1 + rows_ - 1) * (2 * cols_ - 1) + (tau2 + cols_ - 1);
}

ComplexValue CorrelationTable::at(int tau1, int tau2) const {
  if (kind_ == Kind::aperiodic &&
      (std::abs(tau1) >= rows_ || std::abs(tau2) >= cols_))
    return exact_ ? ComplexValue::exact_value(0, 0)
                  : ComplexValue::float_value(0.0, 0.0);
  return v_[index(tau1, tau2)];
}

void CorrelationTable::set(int tau1, int tau2, const ComplexValue& v) {
  v_[index(tau1, tau2)] = v;
}

CorrelationTable CorrelationTable::plus(const CorrelationTable& o) const {
  if (kind_ != o.kind_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::shape_mismatch, "cannot add mismatched tables");
  CorrelationTable out(kind_, rows_, cols_, exact_ && o.exact_);
  for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = v_[i] + o.v_[i];
  return out;
}

namespace {

bool exact_alphabet(std::int64_t q) { return q == 1 || q == 2 || q == 4; }

std::vector<std::uint8_t> stage_bytes(const UnimodularArray& a) {
  std::vector<std::uint8_t> out(a.exponents().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>(a.exponents()[i]);
  return out;
}

void require_same_shape(const UnimodularArray& a, const UnimodularArray& b) {
  if (!a.same_shape(b))
    throw Error(ErrorCode::shape_mismatch,
                "correlation operands must share alphabet and shape");
}

// Roots of unity for the inexact path.
std::vector<std::complex<double>> root_table(std::int64_t q) {
  std::vector<std::complex<double>> rt(static_cast<std::size_t>(q));
  for (std::int64_t k = 0; k < q; ++k) {
    double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(q);
    rt[k] = {std::cos(ang), std::sin(ang)};
  }
  return rt;
}

std::vector<std::complex<double>> to_complex(const UnimodularArray& a) {
  auto rt = root_table(a.q());
  std::vector<std::complex<double>> out(a.exponents().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rt[a.exponents()[i]];
  return out;
}

}  // namespace

CorrelationTable periodic_xcorr(const UnimodularArray& a,
                                const UnimodularArray& b) {
  require_same_shape(a, b);
  const int L1 = a.rows(), L2 = a.cols();
  const std::int64_t q = a.q();
  CorrelationTable t(CorrelationTable::Kind::periodic, L1, L2,
                     exact_alphabet(q));

  if (q <= 2) {
    auto ab = stage_bytes(a), bb = stage_bytes(b);
    const auto& k = kern::active_kernels();
    for (int t1 = 0; t1 < L1; ++t1)
      for (int t2 = 0; t2 < L2; ++t2) {
        std::int64_t acc = 0;
        for (int i = 0; i < L1; ++i) {
          const std::uint8_t* x = ab.data() + static_cast<std::size_t>(i) * L2;
          const std::uint8_t* y =
              bb.data() + static_cast<std::size_t>((i + t1) % L1) * L2;
          acc += k.span_q2(x, y + t2, static_cast<std::size_t>(L2 - t2));
          acc += k.span_q2(x + (L2 - t2), y, static_cast<std::size_t>(t2));
        }
        t.set(t1, t2, ComplexValue::exact_value(acc, 0));
      }
    return t;
  }

  if (q == 4) {
    auto ab = stage_bytes(a), bb = stage_bytes(b);
    const auto& k = kern::active_kernels();
    for (int t1 = 0; t1 < L1; ++t1)
      for (int t2 = 0; t2 < L2; ++t2) {
        kern::GaussianSum acc;
        for (int i = 0; i < L1; ++i) {
          const std::uint8_t* x = ab.data() + static_cast<std::size_t>(i) * L2;
          const std::uint8_t* y =
              bb.data() + static_cast<std::size_t>((i + t1) % L1) * L2;
          auto s1 = k.span_q4(x, y + t2, static_cast<std::size_t>(L2 - t2));
          auto s2 = k.span_q4(x + (L2 - t2), y, static_cast<std::size_t>(t2));
          acc.re += s1.re + s2.re;
          acc.im += s1.im + s2.im;
        }
        t.set(t1, t2, ComplexValue::exact_value(acc.re, acc.im));
      }
    return t;
  }

  auto rt = root_table(q);
  for (int t1 = 0; t1 < L1; ++t1)
    for (int t2 = 0; t2 < L2; ++t2) {
      std::complex<double> acc(0.0, 0.0);
      for (int i = 0; i < L1; ++i)
        for (int j = 0; j < L2; ++j) {
          std::int64_t d = a.exponent(i, j) -
                           b.exponent((i + t1) % L1, (j + t2) % L2);
          acc += rt[((d % q) + q) % q];
        }
      t.set(t1, t2, ComplexValue::float_value(acc.real(), acc.imag()));
    }
  return t;
}

CorrelationTable aperiodic_xcorr(const UnimodularArray& a,
                                 const UnimodularArray& b) {
  require_same_shape(a, b);
  const int L1 = a.rows(), L2 = a.cols();
  const std::int64_t q = a.q();
  CorrelationTable t(CorrelationTable::Kind::aperiodic, L1, L2,
                     exact_alphabet(q));

  auto row_range = [L1](int t1) {
    return std::pair<int, int>{std::max(0, -t1), std::min(L1, L1 - t1)};
  };

  if (q <= 2 || q == 4) {
    auto ab = stage_bytes(a), bb = stage_bytes(b);
    const auto& k = kern::active_kernels();
    for (int t1 = 1 - L1; t1 <= L1 - 1; ++t1) {
      auto [i0, i1] = row_range(t1);
      for (int t2 = 1 - L2; t2 <= L2 - 1; ++t2) {
        const int n = L2 - std::abs(t2);
        const int xoff = std::max(0, -t2), yoff = std::max(0, t2);
        std::int64_t re = 0, im = 0;
        for (int i = i0; i < i1; ++i) {
          const std::uint8_t* x =
              ab.data() + static_cast<std::size_t>(i) * L2 + xoff;
          const std::uint8_t* y =
              bb.data() + static_cast<std::size_t>(i + t1) * L2 + yoff;
          if (q <= 2) {
            re += k.span_q2(x, y, static_cast<std::size_t>(n));
          } else {
            auto s = k.span_q4(x, y, static_cast<std::size_t>(n));
            re += s.re;
            im += s.im;
          }
        }
        t.set(t1, t2, ComplexValue::exact_value(re, im));
      }
    }
    return t;
  }

  auto rt = root_table(q);
  for (int t1 = 1 - L1; t1 <= L1 - 1; ++t1) {
    auto [i0, i1] = row_range(t1);
    for (int t2 = 1 - L2; t2 <= L2 - 1; ++t2) {
      const int n = L2 - std::abs(t2);
      const int xoff = std::max(0, -t2), yoff = std::max(0, t2);
      std::complex<double> acc(0.0, 0.0);
      for (int i = i0; i < i1; ++i)
        for (int j = 0; j < n; ++j) {
          std::int64_t d =
              a.exponent(i, xoff + j) - b.exponent(i + t1, yoff + j);
          acc += rt[((d % q) + q) % q];
        }
      t.set(t1, t2, ComplexValue::float_value(acc.real(), acc.imag()));
    }
  }
  return t;
}

namespace {

// Periodic cross-correlation of two complex buffers of shape M1 x M2:
// conj(IDFT(conj(DFT(A)) . DFT(B))).
std::vector<std::complex<double>> periodic_fft_buffer(
    std::vector<std::complex<double>> fa, std::vector<std::complex<double>> fb,
    int m1, int m2) {
  fft::transform_2d(fa, m1, m2, false);
  fft::transform_2d(fb, m1, m2, false);
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] = std::conj(fa[i]) * fb[i];
  fft::transform_2d(fa, m1, m2, true);
  for (auto& x : fa) x = std::conj(x);
  return fa;
}

}  // namespace

CorrelationTable periodic_xcorr_fft(const UnimodularArray& a,
                                    const UnimodularArray& b) {
  require_same_shape(a, b);
  const int L1 = a.rows(), L2 = a.cols();
  auto r = periodic_fft_buffer(to_complex(a), to_complex(b), L1, L2);
  CorrelationTable t(CorrelationTable::Kind::periodic, L1, L2, false);
  for (int t1 = 0; t1 < L1; ++t1)
    for (int t2 = 0; t2 < L2; ++t2) {
      auto v = r[static_cast<std::size_t>(t1) * L2 + t2];
      t.set(t1, t2, ComplexValue::float_value(v.real(), v.imag()));
    }
  return t;
}

CorrelationTable aperiodic_xcorr_fft(const UnimodularArray& a,
                                     const UnimodularArray& b) {
  require_same_shape(a, b);
  const int L1 = a.rows(), L2 = a.cols();
  const int m1 = 2 * L1 - 1, m2 = 2 * L2 - 1;
  std::vector<std::complex<double>> pa(static_cast<std::size_t>(m1) * m2),
      pb(static_cast<std::size_t>(m1) * m2);
  auto ca = to_complex(a), cb = to_complex(b);
  for (int i = 0; i < L1; ++i)
    for (int j = 0; j < L2; ++j) {
      pa[static_cast<std::size_t>(i) * m2 + j] = ca[static_cast<std::size_t>(i) * L2 + j];
      pb[static_cast<std::size_t>(i) * m2 + j] = cb[static_cast<std::size_t>(i) * L2 + j];
    }
  auto r = periodic_fft_buffer(std::move(pa), std::move(pb), m1, m2);
  CorrelationTable t(CorrelationTable::Kind::aperiodic, L1, L2, false);
  for (int t1 = 1 - L1; t1 <= L1 - 1; ++t1)
    for (int t2 = 1 - L2; t2 <= L2 - 1; ++t2) {
      auto v = r[static_cast<std::size_t>(((t1 % m1) + m1) % m1) * m2 +
                 static_cast<std::size_t>(((t2 % m2) + m2) % m2)];
      t.set(t1, t2, ComplexValue::float_value(v.real(), v.imag()));
    }
  return t;
}

CorrelationTable aacs(const ArrayPair& pair) {
  return aperiodic_xcorr(pair.first, pair.first)
      .plus(aperiodic_xcorr(pair.second, pair.second));
}

bool conjugate_symmetric(const CorrelationTable& t, double tol) {
  return conjugate_symmetric_pair(t, t, tol);
}

bool conjugate_symmetric_pair(const CorrelationTable& tab,
                              const CorrelationTable& tba, double tol) {
  if (tab.kind() != tba.kind() || tab.rows() != tba.rows() ||
      tab.cols() != tba.cols())
    throw Error(ErrorCode::shape_mismatch,
                "symmetry check needs same-shape tables");
  for (int t1 = tab.tau1_min(); t1 <= tab.tau1_max(); ++t1)
    for (int t2 = tab.tau2_min(); t2 <= tab.tau2_max(); ++t2) {
      ComplexValue v = tab.at(t1, t2);
      ComplexValue w = tba.at(-t1, -t2).conj();
      if (v.exact && w.exact) {
        if (!v.equals(w)) return false;
      } else {
        if (std::hypot(v.re - w.re, v.im - w.im) > tol) return false;
      }
    }
  return true;
}

double zero_tolerance(const CorrelationTable& t) {
  return 1e-9 * static_cast<double>(t.rows()) * static_cast<double>(t.cols());
}

}  // namespace gcz
