#include "cyclekit/series.hpp"

#include <stdexcept>

namespace cyclekit {

TruncatedSeries f_a_series(const CycleLengthSet& a, int order) {
  if (order > a.n_max())
    throw std::invalid_argument("f_a_series: order exceeds the set's n_max");
  TruncatedSeries s(order);
  for (int r = 1; r <= order; ++r)
    if (a.contains(r)) s.set_coeff(r, BigRational(1, r));
  return s;
}

TruncatedSeries series_mul(const TruncatedSeries& f,
                           const TruncatedSeries& g) {
  if (f.order() != g.order())
    throw std::invalid_argument("series_mul: mismatched orders");
  const int n = f.order();
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (g.coeff(j) == 0) continue;
      out.set_coeff(i + j, out.coeff(i + j) + f.coeff(i) * g.coeff(j));
    }
  }
  return out;
}

TruncatedSeries series_exp(const TruncatedSeries& f) {
  if (f.coeff(0) != 0)
    throw std::invalid_argument("series_exp: nonzero constant term");
  const int n = f.order();
  TruncatedSeries e(n);
  e.set_coeff(0, 1);
  for (int m = 1; m <= n; ++m) {
    BigRational acc = 0;
    for (int k = 1; k <= m; ++k) {
      if (f.coeff(k) == 0) continue;
      acc += BigRational(k) * f.coeff(k) * e.coeff(m - k);
    }
    e.set_coeff(m, acc / m);
  }
  return e;
}

}  // namespace cyclekit
