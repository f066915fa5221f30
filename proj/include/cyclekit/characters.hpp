#pragma once

#include <vector>

#include "cyclekit/permcore.hpp"
#include "cyclekit/rational.hpp"

namespace cyclekit {

// Integer partition, weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int n() const;
  bool operator==(const Partition&) const = default;
};

// One-hook shape: a row of length `arm` and a column of height `leg`,
// arm + leg = n + 1.
struct Hook {
  int n = 0;
  int arm = 0;
  int leg = 0;
};

// All partitions of n, lexicographically descending: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

std::vector<Hook> hooks_of(int n);
Partition hook_shape(const Hook& h);

// Dimension of the irreducible representation for this shape, by the
// hook-length formula n! / prod of hook lengths.
BigInt dimension(const Partition& lambda);

// Character value chi^lambda at the conjugacy class of type t, by the
// recursive border-strip rule with sign (-1)^height per strip.
BigInt mn_character(const Partition& lambda, const CycleType& t);

// Hook-shape character as a coefficient extraction:
//   (-1)^leg [x^arm] (x/(1-x)) prod_r (x^r - 1)^{nu_r},
// evaluated with integer polynomial arithmetic truncated at degree arm.
BigInt hook_character_lemma(const Hook& h, const CycleType& t);

// P(sigma = s) for a fixed s of type t, where sigma is the product of two
// independent uniform maximal cycles:
//   (1/N!) sum_{arm=1..N} C(N-1,arm-1)^-1 (-1)^{leg}
//          [x^arm] (x/(1-x)) prod_r (x^r - 1)^{nu_r}.
BigRational product_class_prob(const CycleType& t);

// P(sigma_1...sigma_k = s) for a fixed s of type `target`, sigma_j uniform on
// the class of type classes[j]:
//   (1/N!) sum_lambda f(lambda)^{1-k} chi(target) prod_j chi(classes[j]).
BigRational k_fold_class_product_prob(const std::vector<CycleType>& classes,
                                      const CycleType& target);

}  // namespace cyclekit
