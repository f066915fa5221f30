#include "cyclekit/qformulas.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace cyclekit {

QResult make_q_result(int n, std::string aset, BigRational value) {
  QResult r;
  r.n = n;
  r.aset = std::move(aset);
  r.value = std::move(value);
  const BigRational count = r.value * BigRational(factorial(n - 1));
  if (denominator(count) != 1)
    throw std::logic_error("q result: value * (N-1)! is not an integer");
  r.numerator_count = numerator(count);
  return r;
}

QResult q_general(const CycleLengthSet& a, int n) {
  if (n < 1) throw std::invalid_argument("q_general: n must be >= 1");
  if (n > a.n_max())
    throw std::invalid_argument("q_general: n exceeds the set's n_max");
  const ProbVector pa = p_series(a, n);
  const ProbVector pc = p_series(complement_aset(a), n);
  // boundary convention: p_{-1} of the complement is 0 (the l = 0 term then
  // contributes p_N(A) with weight 1); checked exhaustively against the
  // brute-force enumeration
  auto pc_at = [&](int l) { return l < 0 ? BigRational(0) : pc.at(l); };
  BigRational sum = 0;
  for (int l = 0; l <= n; ++l) {
    const int k = n - l;
    const BigRational diff = pc_at(l) - pc_at(l - 1);
    if (diff == 0 || pa.at(k) == 0) continue;
    BigRational term = inv_binomial(n, l) * pa.at(k) * diff;
    if (l % 2 != 0) term = -term;
    sum += term;
  }
  return make_q_result(n, a.describe(),
                       BigRational(n, n + 1) * sum);
}

QResult q_even(int n) {
  if (n < 1) throw std::invalid_argument("q_even: n must be >= 1");
  if (n % 2 != 0) return make_q_result(n, "even", BigRational(0));
  // sum starts at k = 1; the summand carries 1/k
  BigRational sum = 0;
  const int half = n / 2;
  for (int k = 1; k <= half; ++k) {
    const int l = half - k;
    const BigRational factor =
        BigRational(1) - inv_binomial(n, 2 * l);  // equals 1 - C(N,2k)^-1
    if (factor == 0) continue;
    sum += BigRational(binomial(2 * (k - 1), k - 1) * binomial(2 * l, l), k) *
           factor;
  }
  const BigRational prefix(2 * n, BigInt(n + 1) * pow2(n));
  return make_q_result(n, "even", prefix * sum);
}

QResult q_odd(int n) {
  if (n < 1) throw std::invalid_argument("q_odd: n must be >= 1");
  BigRational value;
  if (n % 2 == 0) {
    BigRational first = 0;
    for (int k = 0; 2 * k <= n; ++k) {
      const int l = n / 2 - k;
      first += BigRational(binomial(2 * k, k) * binomial(2 * l, l)) *
               inv_binomial(n, 2 * l);
    }
    BigRational second = 0;
    for (int k = 0; 2 * k <= n - 2; ++k) {
      const int l = (n - 2) / 2 - k;
      second += BigRational(binomial(2 * k, k) * binomial(2 * l, l)) *
                inv_binomial(n, 2 * l + 1);
    }
    value = BigRational(n, BigInt(n + 1) * pow2(n)) * first +
            BigRational(n, BigInt(n + 1) * pow2(n - 2)) * second;
  } else {
    BigRational sum = 0;
    for (int l = 0; 2 * l <= n - 1; ++l) {
      const int k = (n - 1) / 2 - l;
      sum += BigRational(binomial(2 * l, l) * binomial(2 * k, k)) *
             (inv_binomial(n, 2 * l) + inv_binomial(n, 2 * l + 1));
    }
    value = BigRational(n, BigInt(n + 1) * pow2(n - 1)) * sum;
  }
  return make_q_result(n, "odd", value);
}

QResult q_divisible(int n, int d) {
  if (n < 1) throw std::invalid_argument("q_divisible: n must be >= 1");
  if (d < 1) throw std::invalid_argument("q_divisible: d must be >= 1");
  const std::string name = "div:" + std::to_string(d);
  if (n % d != 0) return make_q_result(n, name, BigRational(0));
  const int m = n / d;
  BigRational sum = 0;
  BigRational arm_prod = 1;  // prod_{r=1}^{k-1} (r - 1/d), built incrementally
  for (int k = 1; k <= m; ++k) {
    if (k >= 2) arm_prod *= (BigRational(k - 1) - BigRational(1, d));
    const int l = m - k;
    BigRational leg_prod = 1;  // prod_{r'=0}^{l-1} (r' + 1/d)
    for (int r = 0; r < l; ++r) leg_prod *= (BigRational(r) + BigRational(1, d));
    const BigRational sign_inv =
        (d * k) % 2 == 0 ? inv_binomial(n, d * l) : -inv_binomial(n, d * l);
    const BigRational factor = BigRational(1) - sign_inv;
    if (factor == 0) continue;
    sum += arm_prod * leg_prod * factor /
           BigRational(factorial(k) * factorial(l));
  }
  const BigRational prefix(n, BigInt(d) * (n + 1));
  return make_q_result(n, name, prefix * sum);
}

BigInt derangement_q_sum(int n) {
  if (n < 2) throw std::invalid_argument("derangement_q_sum: n must be >= 2");
  BigInt total = 0;
  for (int j = 0; j <= n - 2; ++j) {
    // inner = sum_{j <= k < n} (-1)^k k!/j!, accumulated via the rising
    // product k!/j! so every term stays integral
    BigInt ratio = 1;  // k!/j! at k = j
    BigInt inner = (j % 2 == 0) ? BigInt(1) : BigInt(-1);
    for (int k = j + 1; k < n; ++k) {
      ratio *= k;
      inner += (k % 2 == 0) ? ratio : -ratio;
    }
    total += (j % 2 == 0) ? inner : -inner;
  }
  return (n % 2 == 0) ? BigInt(-total) : total;
}

BigInt c_n_formula(int n) {
  if (n < 2) throw std::invalid_argument("c_n_formula: n must be >= 2");
  BigRational sum = 0;
  for (int mu = 0; mu <= n - 1; ++mu) {
    BigRational term(1, BigInt(n - mu) * factorial(mu));
    sum += (mu % 2 == 0) ? term : -term;
  }
  const BigRational value =
      BigRational(factorial(n)) * sum + ((n % 2 == 0) ? 1 : -1);
  if (denominator(value) != 1)
    throw std::logic_error("c_n_formula: non-integer value");
  return numerator(value);
}

double asymptotic_estimate(int n) {
  if (n < 1) throw std::invalid_argument("asymptotic_estimate: n must be >= 1");
  return 1.0 / std::sqrt(std::numbers::pi * n / 2.0);
}

}  // namespace cyclekit
