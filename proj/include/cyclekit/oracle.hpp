#pragma once

#include <cstdint>
#include <map>

#include "cyclekit/aset.hpp"
#include "cyclekit/permcore.hpp"
#include "cyclekit/qformulas.hpp"
#include "cyclekit/rational.hpp"

namespace cyclekit {

// Default enumeration guard: (n-1)! products at n = 10 is the largest scan
// that stays comfortably interactive.
inline constexpr int kDefaultEnumerationGuard = 10;

// Exact distribution of the cycle type of (1 2 ... n) * z over the (n-1)!
// maximal cycles z.
struct ClassDistribution {
  int n = 0;
  std::map<CycleType, BigInt> counts;
  std::map<CycleType, BigRational> entries;  // counts / (n-1)!
};

// Exhaustive count of the z with every cycle length of (1 2 ... n) * z in
// the given set. Fixing the first factor to the canonical cycle is lossless:
// the type distribution of s*z for uniform independent cycles (s, z) matches
// the one with s pinned, which shrinks the scan from ((n-1)!)^2 pairs to
// (n-1)!.
QResult q_bruteforce(const CycleLengthSet& a, int n, int threads = 0,
                     int guard = kDefaultEnumerationGuard);

ClassDistribution product_class_distribution(
    int n, int threads = 0, int guard = kDefaultEnumerationGuard);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
};

// Samples independent pairs of uniform n-cycles. Trial randomness is
// counter-based on (seed, trial index), so the estimate is byte-identical
// for any worker count.
McEstimate q_montecarlo(const CycleLengthSet& a, int n, std::uint64_t trials,
                        std::uint64_t seed, int threads = 0);

// Counts n-cycles p with p(i) != i-1 (mod n, 0 == n) for every i.
BigInt count_no_backstep_cycles(int n, int threads = 0,
                                int guard = kDefaultEnumerationGuard);

// Counts the (n+1)-cycles z for which (1 2 ... n+1) * z is again a single
// (necessarily odd, for even n) maximal cycle. For even n the count is
// 2*n!/(n+2); for odd n it vanishes by parity.
BigInt count_one_odd_cycle(int n, int threads = 0,
                           int guard = kDefaultEnumerationGuard);

}  // namespace cyclekit
