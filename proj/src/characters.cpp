#include "cyclekit/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cyclekit {

namespace {

void collect_partitions(int remaining, int max_part, std::vector<int>& acc,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{acc});
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    collect_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

void validate_partition(const Partition& lambda) {
  for (size_t i = 0; i < lambda.parts.size(); ++i) {
    if (lambda.parts[i] < 1)
      throw std::invalid_argument("partition: parts must be positive");
    if (i > 0 && lambda.parts[i] > lambda.parts[i - 1])
      throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
}

using Memo = std::map<std::pair<std::vector<int>, size_t>, BigInt>;

// Border strips are found on the beta-set (first-column hook lengths):
// removing a strip of size s moves one beta number b to b - s, legal when
// b - s is free; the strip height is the number of beta numbers strictly
// between the two.
BigInt mn_recurse(const std::vector<int>& lambda,
                  const std::vector<int>& strips, size_t idx, Memo& memo) {
  if (idx == strips.size()) return lambda.empty() ? 1 : 0;
  const auto key = std::make_pair(lambda, idx);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  const int s = strips[idx];
  const int m = static_cast<int>(lambda.size());
  std::vector<int> beta(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    beta[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (m - 1 - i);
  BigInt total = 0;
  for (int i = 0; i < m; ++i) {
    const int b = beta[static_cast<size_t>(i)];
    if (b < s) continue;
    const int target = b - s;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int x : beta)
      if (target < x && x < b) ++height;
    std::vector<int> nb = beta;
    nb[static_cast<size_t>(i)] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> next;
    next.reserve(static_cast<size_t>(m));
    for (int r = 0; r < m; ++r) {
      const int part = nb[static_cast<size_t>(r)] - (m - 1 - r);
      if (part > 0) next.push_back(part);
    }
    const BigInt sub = mn_recurse(next, strips, idx + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.emplace(key, total);
  return total;
}

// prod_r (x^r - 1)^{nu_r} truncated at the given degree.
std::vector<BigInt> strip_polynomial(const CycleType& t, int degree) {
  std::vector<BigInt> poly(static_cast<size_t>(degree) + 1);
  poly[0] = 1;
  for (int r = 1; r <= t.n; ++r) {
    for (int c = 0; c < t.nu[static_cast<size_t>(r)]; ++c) {
      // poly *= (x^r - 1), in place from the top down
      for (int d = degree; d >= 0; --d) {
        BigInt v = -poly[static_cast<size_t>(d)];
        if (d >= r) v += poly[static_cast<size_t>(d - r)];
        poly[static_cast<size_t>(d)] = std::move(v);
      }
    }
  }
  return poly;
}

}  // namespace

int Partition::n() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> acc;
  collect_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<Hook> hooks_of(int n) {
  if (n < 1) throw std::invalid_argument("hooks_of: n must be >= 1");
  std::vector<Hook> out;
  out.reserve(static_cast<size_t>(n));
  for (int arm = n; arm >= 1; --arm) out.push_back(Hook{n, arm, n + 1 - arm});
  return out;
}

Partition hook_shape(const Hook& h) {
  if (h.arm < 1 || h.leg < 1 || h.arm + h.leg != h.n + 1)
    throw std::invalid_argument("hook: arm + leg must equal n + 1");
  std::vector<int> parts(static_cast<size_t>(h.leg), 1);
  parts[0] = h.arm;
  return Partition{std::move(parts)};
}

BigInt dimension(const Partition& lambda) {
  validate_partition(lambda);
  const int rows = static_cast<int>(lambda.parts.size());
  const int cols = rows == 0 ? 0 : lambda.parts[0];
  std::vector<int> conj(static_cast<size_t>(cols), 0);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      if (lambda.parts[static_cast<size_t>(i)] > j) ++conj[static_cast<size_t>(j)];
  BigInt hooks = 1;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < lambda.parts[static_cast<size_t>(i)]; ++j)
      hooks *= (lambda.parts[static_cast<size_t>(i)] - j) +
               (conj[static_cast<size_t>(j)] - i) - 1;
  return factorial(lambda.n()) / hooks;
}

BigInt mn_character(const Partition& lambda, const CycleType& t) {
  validate_partition(lambda);
  if (lambda.n() != t.n)
    throw std::invalid_argument("mn_character: size mismatch");
  const std::vector<int> strips = t.parts();  // fixed removal order
  Memo memo;
  return mn_recurse(lambda.parts, strips, 0, memo);
}

BigInt hook_character_lemma(const Hook& h, const CycleType& t) {
  if (h.arm < 1 || h.leg < 1 || h.arm + h.leg != h.n + 1)
    throw std::invalid_argument("hook: arm + leg must equal n + 1");
  if (h.n != t.n)
    throw std::invalid_argument("hook_character_lemma: size mismatch");
  const std::vector<BigInt> poly = strip_polynomial(t, h.arm);
  // [x^arm] x/(1-x) * poly = sum of poly coefficients below degree arm
  BigInt partial = 0;
  for (int d = 0; d < h.arm; ++d) partial += poly[static_cast<size_t>(d)];
  return (h.leg % 2 == 0) ? partial : -partial;
}

BigRational product_class_prob(const CycleType& t) {
  const int n = t.n;
  if (n < 1) throw std::invalid_argument("product_class_prob: empty type");
  const std::vector<BigInt> poly = strip_polynomial(t, n);
  BigRational sum = 0;
  BigInt partial = 0;
  for (int arm = 1; arm <= n; ++arm) {
    partial += poly[static_cast<size_t>(arm - 1)];
    const int leg = n + 1 - arm;
    const BigInt chi = (leg % 2 == 0) ? partial : -partial;
    if (chi == 0) continue;
    sum += BigRational(chi, binomial(n - 1, arm - 1));
  }
  return sum / BigRational(factorial(n));
}

BigRational k_fold_class_product_prob(const std::vector<CycleType>& classes,
                                      const CycleType& target) {
  if (classes.empty())
    throw std::invalid_argument("k_fold_class_product_prob: no classes");
  const int n = target.n;
  for (const CycleType& c : classes)
    if (c.n != n)
      throw std::invalid_argument("k_fold_class_product_prob: size mismatch");
  const int k = static_cast<int>(classes.size());
  BigRational sum = 0;
  for (const Partition& lambda : partitions_of(n)) {
    const BigInt chi_target = mn_character(lambda, target);
    if (chi_target == 0) continue;
    BigInt chi_prod = 1;
    for (const CycleType& c : classes) {
      chi_prod *= mn_character(lambda, c);
      if (chi_prod == 0) break;
    }
    if (chi_prod == 0) continue;
    BigInt dim_power = 1;
    const BigInt dim = dimension(lambda);
    for (int e = 0; e < k - 1; ++e) dim_power *= dim;
    sum += BigRational(chi_target * chi_prod, dim_power);
  }
  return sum / BigRational(factorial(n));
}

}  // namespace cyclekit
