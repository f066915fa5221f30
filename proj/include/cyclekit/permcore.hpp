#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclekit/rational.hpp"
#include "cyclekit/rng.hpp"

namespace cyclekit {

// A permutation of [1..n] in one-line form. Values are 1-indexed throughout;
// the product convention is (p*q)(i) = p(q(i)).
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  static Permutation from_one_line(std::vector<int> image);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<size_t>(i - 1)]; }

  const std::vector<int>& one_line() const { return image_; }

  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}
  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend class NCycleStream;
  friend Permutation random_ncycle(int n, SplitMix64& rng);
  friend Permutation apply_block_transposition(const Permutation& u, int i,
                                               int j, int k);
  friend Permutation lehmer_unrank(int n, std::uint64_t rank);

  std::vector<int> image_;  // image_[i-1] = p(i)
};

// Cycle-length multiset: nu[r] = number of r-cycles, sum r*nu[r] = n.
struct CycleType {
  int n = 0;
  std::vector<int> nu;  // size n+1, index 0 unused

  std::vector<int> parts() const;  // lengths, weakly decreasing
  int total_cycles() const;
  int odd_cycles() const;

  bool operator==(const CycleType&) const = default;
  auto operator<=>(const CycleType& other) const {
    return nu <=> other.nu;
  }
};

CycleType cycle_type_from_parts(const std::vector<int>& parts);

Permutation compose(const Permutation& p, const Permutation& q);
CycleType cycle_type(const Permutation& p);

// The canonical maximal cycle (1 2 ... n).
Permutation canonical_cycle(int n);

// The (n-1)! n-cycles, written (1, a_2, ..., a_n) over all arrangements of
// [2..n] in lexicographic order. Ranges split deterministically, so parallel
// consumers reduce to the same result as a sequential scan.
class NCycleStream {
 public:
  explicit NCycleStream(int n);

  std::uint64_t size() const { return size_; }
  Permutation at(std::uint64_t index) const;

  // Visits indices [begin, end) in order.
  template <typename F>
  void for_each(std::uint64_t begin, std::uint64_t end, F&& f) const {
    std::vector<int> arrangement = arrangement_at(begin);
    std::vector<int> image(static_cast<size_t>(n_));
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      cycle_image(arrangement, image);
      f(Permutation(image, Permutation::Unchecked{}));
      next_arrangement(arrangement);
    }
  }

 private:
  std::vector<int> arrangement_at(std::uint64_t index) const;
  void cycle_image(const std::vector<int>& arrangement,
                   std::vector<int>& image) const;
  static void next_arrangement(std::vector<int>& arrangement);

  int n_;
  std::uint64_t size_;
};

// Uniform over the (n-1)! n-cycles: a Fisher-Yates arrangement of [2..n]
// appended to the anchor 1.
Permutation random_ncycle(int n, SplitMix64& rng);
Permutation random_ncycle(int n, std::uint64_t seed);

// N! / prod_r r^nu_r nu_r!, the number of permutations with this type.
BigInt class_size(const CycleType& t);

// Cycle-notation I/O, 1-indexed, e.g. "(1 3 2)(4)".
std::string format_cycles(const Permutation& p);
Permutation parse_cycles(std::string_view text, int n);

std::string format_one_line(const Permutation& p);
Permutation parse_one_line(std::string_view text);

}  // namespace cyclekit
