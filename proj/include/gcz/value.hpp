#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace gcz {

// A complex number that remembers whether it is exact. Correlation sums over
// alphabets whose entries are Gaussian integers (q = 1, 2, 4) stay in integer
// arithmetic from end to end; every other alphabet falls back to doubles.
// The double mirror (re, im) is always kept in sync so callers can take
// magnitudes without branching on the kind.
struct ComplexValue {
  bool exact = true;
  std::int64_t re_n = 0, im_n = 0;
  double re = 0.0, im = 0.0;

  static ComplexValue exact_value(std::int64_t r, std::int64_t i) {
    ComplexValue v;
    v.exact = true;
    v.re_n = r;
    v.im_n = i;
    v.re = static_cast<double>(r);
    v.im = static_cast<double>(i);
    return v;
  }

  static ComplexValue float_value(double r, double i) {
    ComplexValue v;
    v.exact = false;
    v.re = r;
    v.im = i;
    return v;
  }

  // i^k for k in [0, 4): the four Gaussian units.
  static ComplexValue gaussian_unit(int k) {
    static constexpr std::int64_t res[4] = {1, 0, -1, 0};
    static constexpr std::int64_t ims[4] = {0, 1, 0, -1};
    int m = ((k % 4) + 4) % 4;
    return exact_value(res[m], ims[m]);
  }

  // exp(2*pi*i*e/q); exact whenever the alphabet consists of Gaussian units.
  static ComplexValue root_of_unity(std::int64_t q, std::int64_t e) {
    e = ((e % q) + q) % q;
    if (q == 1) return exact_value(1, 0);
    if (q == 2) return gaussian_unit(static_cast<int>(2 * e));
    if (q == 4) return gaussian_unit(static_cast<int>(e));
    double ang = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(q);
    return float_value(std::cos(ang), std::sin(ang));
  }

  ComplexValue operator+(const ComplexValue& o) const {
    if (exact && o.exact) return exact_value(re_n + o.re_n, im_n + o.im_n);
    return float_value(re + o.re, im + o.im);
  }

  ComplexValue operator-() const {
    if (exact) return exact_value(-re_n, -im_n);
    return float_value(-re, -im);
  }

  ComplexValue conj() const {
    if (exact) return exact_value(re_n, -im_n);
    return float_value(re, -im);
  }

  ComplexValue scaled(std::int64_t k) const {
    if (exact) return exact_value(re_n * k, im_n * k);
    return float_value(re * k, im * k);
  }

  std::complex<double> as_complex() const { return {re, im}; }

  double abs() const { return std::hypot(re, im); }

  bool is_zero(double tol) const {
    if (exact) return re_n == 0 && im_n == 0;
    return abs() <= tol;
  }

  // Equality in the mathematical sense; exact values compare by integers.
  bool equals(const ComplexValue& o) const {
    if (exact && o.exact) return re_n == o.re_n && im_n == o.im_n;
    return re == o.re && im == o.im;
  }
};

}  // namespace gcz
