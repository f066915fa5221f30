#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "cyclekit/permcore.hpp"
#include "cyclekit/rational.hpp"

namespace cyclekit {

inline constexpr int kDefaultBfsGuard = 10;

// Exact block-transposition distance from the identity for every
// permutation of [n], indexed by Lehmer rank.
struct DistanceTable {
  int n = 0;
  std::vector<std::uint8_t> dist;

  int max_distance() const;
  int at(const Permutation& u) const;
};

// Swaps the adjacent blocks u[i+1..j] and u[j+1..k] (1-based entries,
// 0 <= i < j < k <= n cut positions).
Permutation apply_block_transposition(const Permutation& u, int i, int j,
                                      int k);

// All C(n+1, 3) cut triples at size n.
std::vector<std::array<int, 3>> block_transposition_moves(int n);

std::uint64_t lehmer_rank(const Permutation& u);
Permutation lehmer_unrank(int n, std::uint64_t rank);

// Level-synchronous breadth-first search from the identity over all block
// transpositions. The table is the graph metric, so it is identical for any
// worker count.
DistanceTable btd_bfs(int n, int threads = 0, int guard = kDefaultBfsGuard);

// Histogram distance -> count; counts sum to n!.
std::map<int, std::uint64_t> btd_distribution(const DistanceTable& table);

// Checks that the number of permutations at distance >= ceil((n+1)/2) is at
// least n! * q_{n+1}(even), the exact integer bound. At odd n+1 the bound is
// zero and the check is vacuous (reported, not skipped).
struct LowerBoundReport {
  int n = 0;
  int threshold = 0;         // ceil((n+1)/2)
  std::uint64_t count_hard = 0;
  BigInt bound;              // n! * q_{n+1}(even), always an integer
  bool vacuous = false;      // bound == 0
  bool holds = false;
};

LowerBoundReport verify_lower_bound(int n, int threads = 0,
                                    int guard = kDefaultBfsGuard);

}  // namespace cyclekit
