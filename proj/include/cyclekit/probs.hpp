#pragma once

#include <vector>

#include "cyclekit/aset.hpp"
#include "cyclekit/rational.hpp"

namespace cyclekit {

// p_0..p_n where p_k is the probability that a uniform permutation of [k]
// has all cycle lengths in A.
struct ProbVector {
  int n = 0;
  std::vector<BigRational> values;  // p_0 .. p_n

  const BigRational& at(int k) const {
    return values.at(static_cast<size_t>(k));
  }
};

// Series route: coefficients 0..n of exp(F_A).
ProbVector p_series(const CycleLengthSet& a, int n);

// Partition-sum route for p_k(A): sum over multiplicity vectors mu_r >= 0,
// r in the complement of A, with sum r*mu_r <= k, of the product of
// (-1)^mu_r / (r^mu_r * mu_r!). Independent of the series route.
BigRational p_partition_sum(const CycleLengthSet& a, int k);

// Partition-sum route for p_l of the complement: same enumeration but with
// sum r*mu_r = l exactly and all-positive terms.
BigRational pc_partition_sum(const CycleLengthSet& a, int l);

enum class ParityKind { even, odd };

// Closed forms: 2^-N * C(N, N/2) for the even set (N even), and for the odd
// set the same at even N, 2^{-N+1} * C(N-1, (N-1)/2) at odd N.
BigRational p_closed(ParityKind kind, int n);

// Closed form for the set of lengths divisible by d, N = 0 mod d:
// (1/(N/d)!) * prod_{r=0}^{N/d-1} (r + 1/d).
BigRational p_closed_divisible(int n, int d);

}  // namespace cyclekit
