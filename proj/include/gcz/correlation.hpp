#pragma once

#include <vector>

#include "gcz/array.hpp"
#include "gcz/value.hpp"

namespace gcz {

// Full table of correlation values over all shifts.
//   periodic:  tau1 in [0, L1), tau2 in [0, L2)       (L1*L2 entries)
//   aperiodic: tau1 in (-L1, L1), tau2 in (-L2, L2)   ((2L1-1)*(2L2-1))
// rows/cols are the dimensions L1, L2 of the correlated arrays, not the
// table extents. Values are exact Gaussian integers when q is 1, 2 or 4.
class CorrelationTable {
 public:
  enum class Kind { periodic, aperiodic };

  CorrelationTable(Kind kind, int rows, int cols, bool exact);

  Kind kind() const { return kind_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool exact() const { return exact_; }

  int tau1_count() const {
    return kind_ == Kind::periodic ? rows_ : 2 * rows_ - 1;
  }
  int tau2_count() const {
    return kind_ == Kind::periodic ? cols_ : 2 * cols_ - 1;
  }
  int tau1_min() const { return kind_ == Kind::periodic ? 0 : 1 - rows_; }
  int tau2_min() const { return kind_ == Kind::periodic ? 0 : 1 - cols_; }
  int tau1_max() const { return kind_ == Kind::periodic ? rows_ - 1 : rows_ - 1; }
  int tau2_max() const { return kind_ == Kind::periodic ? cols_ - 1 : cols_ - 1; }

  // Value at a shift. Periodic tables accept any integers and reduce them
  // modulo (L1, L2); aperiodic tables return zero outside the stored range,
  // which is the mathematically correct extension.
  ComplexValue at(int tau1, int tau2) const;

  void set(int tau1, int tau2, const ComplexValue& v);

  // Entrywise sum; both tables must agree on kind and shape.
  CorrelationTable plus(const CorrelationTable& o) const;

  const std::vector<ComplexValue>& values() const { return v_; }

 private:
  int index(int tau1, int tau2) const;

  Kind kind_;
  int rows_, cols_;
  bool exact_;
  std::vector<ComplexValue> v_;
};

// R_{A,B}(t1, t2) = sum over (i, j) of A[i][j] * conj(B[(i+t1) mod L1][(j+t2) mod L2]).
CorrelationTable periodic_xcorr(const UnimodularArray& a,
                                const UnimodularArray& b);

// C_{A,B}(t1, t2) = sum over the overlap of A with B shifted by (t1, t2).
// All four sign quadrants are stored explicitly.
CorrelationTable aperiodic_xcorr(const UnimodularArray& a,
                                 const UnimodularArray& b);

// FFT-accelerated periodic cross-correlation. Always inexact; agrees with
// periodic_xcorr within 1e-9 per entry.
CorrelationTable periodic_xcorr_fft(const UnimodularArray& a,
                                    const UnimodularArray& b);

// Aperiodic cross-correlation through the FFT path, via zero-padding to
// 2L-1 per dimension. Always inexact.
CorrelationTable aperiodic_xcorr_fft(const UnimodularArray& a,
                                     const UnimodularArray& b);

// Aperiodic autocorrelation sum C_A + C_B of a pair, the quantity that must
// vanish off-peak for a complementary pair.
CorrelationTable aacs(const ArrayPair& pair);

// Conjugate symmetry of an autocorrelation table: T(t1, t2) equals
// conj(T(-t1, -t2)) at every shift. Exact tables are compared exactly,
// inexact ones within tol.
bool conjugate_symmetric(const CorrelationTable& t, double tol = 0.0);

// Cross form of the same property: Tab(t1, t2) = conj(Tba(-t1, -t2)).
bool conjugate_symmetric_pair(const CorrelationTable& tab,
                              const CorrelationTable& tba, double tol = 0.0);

// Zero threshold used for inexact tables: 1e-9 * L1 * L2.
double zero_tolerance(const CorrelationTable& t);

}  // namespace gcz
