#pragma once

#include <vector>

#include "cyclekit/aset.hpp"
#include "cyclekit/rational.hpp"

namespace cyclekit {

// Power series over exact rationals, truncated at a fixed order. All
// arithmetic is exact; nothing in this module touches floating point.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order)
      : coeffs_(static_cast<size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("series: negative order");
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const BigRational& coeff(int k) const {
    return coeffs_.at(static_cast<size_t>(k));
  }

  void set_coeff(int k, BigRational v) {
    coeffs_.at(static_cast<size_t>(k)) = std::move(v);
  }

  TruncatedSeries negated() const {
    TruncatedSeries s(order());
    for (int k = 0; k <= order(); ++k) s.coeffs_[static_cast<size_t>(k)] = -coeff(k);
    return s;
  }

  bool operator==(const TruncatedSeries& other) const {
    return coeffs_ == other.coeffs_;
  }

 private:
  std::vector<BigRational> coeffs_;  // c_0 .. c_order
};

// F_A(x) = sum over r in A, 1 <= r <= order, of x^r / r.
TruncatedSeries f_a_series(const CycleLengthSet& a, int order);

// Cauchy product truncated at the common order; orders must match.
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

// exp(f) for f with zero constant term, via the derivative recurrence
// n*e_n = sum_{k=1..n} k * f_k * e_{n-k}.
TruncatedSeries series_exp(const TruncatedSeries& f);

}  // namespace cyclekit
