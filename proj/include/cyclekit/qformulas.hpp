#pragma once

#include <string>

#include "cyclekit/aset.hpp"
#include "cyclekit/probs.hpp"
#include "cyclekit/rational.hpp"

namespace cyclekit {

// Probability that the product of two independent uniform N-cycles has all
// cycle lengths in the chosen set, together with the equivalent integer
// count: numerator_count = value * (N-1)! is the number of N-cycles z for
// which (1 2 ... N) * z qualifies.
struct QResult {
  int n = 0;
  std::string aset;
  BigRational value;
  BigInt numerator_count;
};

QResult make_q_result(int n, std::string aset, BigRational value);

// General alternating-sum formula:
//   q_N(A) = N/(N+1) * sum_{k+l=N} (-1)^l C(N,l)^-1 p_k(A) (p_l(Ac)-p_{l-1}(Ac))
// with p_0(A) = p_0(Ac) = 1 and p_{-1}(Ac) = 0. The p-values come from the
// series route.
QResult q_general(const CycleLengthSet& a, int n);

// Positive-summand form for the even set (zero at odd n, where no partition
// into even parts exists):
//   q_N(E) = 2N/((N+1) 2^N) * sum_{k+l=N/2, k>=1}
//            (1/k) C(2(k-1),k-1) C(2l,l) (1 - C(N,2l)^-1).
QResult q_even(int n);

// Positive-summand forms for the odd set: a two-sum formula at even n and a
// single-sum formula at odd n.
QResult q_odd(int n);

// Lengths divisible by d (zero when d does not divide n):
//   q_N(D) = N/(d(N+1)) * sum_{dk+dl=N, k>=1} 1/(k! l!)
//            (1 - (-1)^{dk} C(N,dl)^-1)
//            prod_{r=1}^{k-1}(r-1/d) prod_{r'=0}^{l-1}(r'+1/d).
QResult q_divisible(int n, int d);

// (N-1)! * q_N({2,3,...}) as an exact integer:
//   (-1)^{N-1} sum_{j=0}^{N-2} ((-1)^j / j!) sum_{j<=k<N} (-1)^k k!.
// Counts the N-cycles z for which (1 2 ... N) * z is a derangement.
BigInt derangement_q_sum(int n);

// Inclusion-exclusion count of N-cycles with no backstep (no i with
// p(i) = i-1 mod N): N! sum_{mu=0}^{N-1} (-1)^mu / ((N-mu) mu!) + (-1)^N.
// Equals derangement_q_sum(n); no formal proof is known, the equality is
// checked numerically.
BigInt c_n_formula(int n);

// Leading asymptotic (pi*N/2)^{-1/2} shared by q_N(even) and q_N(odd);
// diagnostic only, the single floating-point value in this module.
double asymptotic_estimate(int n);

}  // namespace cyclekit
