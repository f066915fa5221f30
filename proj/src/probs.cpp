#include "cyclekit/probs.hpp"

#include <stdexcept>

#include "cyclekit/series.hpp"

namespace cyclekit {

namespace {

// Multiplies acc by sum over mu >= 0 with r*mu <= budget of the term for the
// current complement length r, recursing over the remaining lengths.
// `alternating` selects the (-1)^mu signs of the p_k(A) line; the exact-sum
// variant for the complement keeps `require_exact` and positive terms.
BigRational complement_multi_index_sum(const std::vector<int>& lengths,
                                       size_t idx, int budget,
                                       bool alternating, bool require_exact) {
  if (idx == lengths.size())
    return (!require_exact || budget == 0) ? BigRational(1) : BigRational(0);
  const int r = lengths[idx];
  BigRational total = 0;
  BigRational term = 1;  // (+-1)^mu / (r^mu mu!)
  for (int mu = 0; r * mu <= budget; ++mu) {
    if (mu > 0) {
      term /= r * mu;
      if (alternating) term = -term;
    }
    total += term * complement_multi_index_sum(lengths, idx + 1,
                                               budget - r * mu, alternating,
                                               require_exact);
  }
  return total;
}

std::vector<int> complement_lengths_upto(const CycleLengthSet& a, int bound) {
  std::vector<int> lengths;
  for (int r = 1; r <= bound; ++r)
    if (!a.contains(r)) lengths.push_back(r);
  return lengths;
}

}  // namespace

ProbVector p_series(const CycleLengthSet& a, int n) {
  if (n > a.n_max())
    throw std::invalid_argument("p_series: n exceeds the set's n_max");
  const TruncatedSeries e = series_exp(f_a_series(a, n));
  ProbVector pv;
  pv.n = n;
  pv.values.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) pv.values.push_back(e.coeff(k));
  return pv;
}

BigRational p_partition_sum(const CycleLengthSet& a, int k) {
  if (k > a.n_max())
    throw std::invalid_argument("p_partition_sum: k exceeds the set's n_max");
  const auto lengths = complement_lengths_upto(a, k);
  return complement_multi_index_sum(lengths, 0, k, /*alternating=*/true,
                                    /*require_exact=*/false);
}

BigRational pc_partition_sum(const CycleLengthSet& a, int l) {
  if (l > a.n_max())
    throw std::invalid_argument("pc_partition_sum: l exceeds the set's n_max");
  const auto lengths = complement_lengths_upto(a, l);
  return complement_multi_index_sum(lengths, 0, l, /*alternating=*/false,
                                    /*require_exact=*/true);
}

BigRational p_closed(ParityKind kind, int n) {
  if (n < 0) throw std::invalid_argument("p_closed: negative n");
  if (kind == ParityKind::even) {
    if (n % 2 != 0)
      throw std::invalid_argument("p_closed: even-set form needs even n");
    return BigRational(binomial(n, n / 2), pow2(n));
  }
  if (n % 2 == 0) return BigRational(binomial(n, n / 2), pow2(n));
  return BigRational(2 * binomial(n - 1, (n - 1) / 2), pow2(n));
}

BigRational p_closed_divisible(int n, int d) {
  if (d < 1) throw std::invalid_argument("p_closed_divisible: d must be >= 1");
  if (n % d != 0)
    throw std::invalid_argument("p_closed_divisible: n not divisible by d");
  const int m = n / d;
  BigRational prod = 1;
  for (int r = 0; r < m; ++r) prod *= (BigRational(r) + BigRational(1, d));
  return prod / BigRational(factorial(m));
}

}  // namespace cyclekit
