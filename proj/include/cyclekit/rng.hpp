#pragma once

#include <cstdint>

namespace cyclekit {

// SplitMix64. Small, portable, and good enough for Monte-Carlo sampling;
// std::random distributions are avoided because their output is
// implementation-defined and the CLI promises byte-identical reruns.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) via mask rejection; exact, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t v;
    do {
      v = next() & mask;
    } while (v >= bound);
    return v;
  }

 private:
  std::uint64_t state_;
};

// Counter-based stream for one Monte-Carlo trial. The stream depends only on
// (seed, index), so a run partitioned across any number of workers draws the
// same samples as a sequential one.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed + 0xD1B54A32D192ED03ULL * (index + 1));
  g.next();
  return g;
}

}  // namespace cyclekit
