#include "cyclekit/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cyclekit/parallel.hpp"
#include "cyclekit/rng.hpp"

namespace cyclekit {

namespace {

void check_guard(int n, int guard, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
  if (n > guard)
    throw std::domain_error(std::string(what) +
                            ": enumeration guard exceeded (raise it explicitly "
                            "to scan larger sizes)");
}

// Walks the cycles of i -> s(z(i)) with s = (1 2 ... n), i.e. the map
// i -> z(i) mod n + 1, without materializing the composed permutation.
// Visitor gets each cycle length; returning false aborts the walk early.
template <typename Visit>
void walk_product_cycles(const Permutation& z, std::vector<char>& seen,
                         Visit&& visit) {
  const int n = z.size();
  std::fill(seen.begin(), seen.end(), 0);
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      const int zj = z(j);
      j = zj == n ? 1 : zj + 1;
      ++len;
    }
    if (!visit(len)) return;
  }
}

}  // namespace

QResult q_bruteforce(const CycleLengthSet& a, int n, int threads, int guard) {
  check_guard(n, guard, "q_bruteforce");
  if (n > a.n_max())
    throw std::invalid_argument("q_bruteforce: n exceeds the set's n_max");
  const NCycleStream stream(n);
  const auto count = parallel_chunked_reduce<std::uint64_t>(
      stream.size(), threads, 0,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t hits = 0;
        std::vector<char> seen(static_cast<size_t>(n) + 1);
        stream.for_each(begin, end, [&](const Permutation& z) {
          bool ok = true;
          walk_product_cycles(z, seen, [&](int len) {
            ok = a.contains(len);
            return ok;
          });
          hits += ok;
        });
        return hits;
      },
      [](std::uint64_t x, std::uint64_t y) { return x + y; });
  return make_q_result(n, a.describe(),
                       BigRational(BigInt(count), factorial(n - 1)));
}

ClassDistribution product_class_distribution(int n, int threads, int guard) {
  check_guard(n, guard, "product_class_distribution");
  const NCycleStream stream(n);
  using CountMap = std::map<CycleType, std::uint64_t>;
  const CountMap merged = parallel_chunked_reduce<CountMap>(
      stream.size(), threads, CountMap{},
      [&](std::uint64_t begin, std::uint64_t end) {
        CountMap local;
        std::vector<char> seen(static_cast<size_t>(n) + 1);
        CycleType t;
        t.n = n;
        stream.for_each(begin, end, [&](const Permutation& z) {
          t.nu.assign(static_cast<size_t>(n) + 1, 0);
          walk_product_cycles(z, seen, [&](int len) {
            ++t.nu[static_cast<size_t>(len)];
            return true;
          });
          ++local[t];
        });
        return local;
      },
      [](CountMap acc, const CountMap& part) {
        for (const auto& [type, c] : part) acc[type] += c;
        return acc;
      });
  ClassDistribution dist;
  dist.n = n;
  const BigInt total = factorial(n - 1);
  for (const auto& [type, c] : merged) {
    dist.counts[type] = c;
    dist.entries[type] = BigRational(BigInt(c), total);
  }
  return dist;
}

McEstimate q_montecarlo(const CycleLengthSet& a, int n, std::uint64_t trials,
                        std::uint64_t seed, int threads) {
  if (trials < 1) throw std::invalid_argument("q_montecarlo: trials must be >= 1");
  if (n > a.n_max())
    throw std::invalid_argument("q_montecarlo: n exceeds the set's n_max");
  const std::uint64_t hits = parallel_chunked_reduce<std::uint64_t>(
      trials, threads, 0,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t local = 0;
        std::vector<char> seen(static_cast<size_t>(n) + 1);
        for (std::uint64_t trial = begin; trial < end; ++trial) {
          SplitMix64 rng = trial_rng(seed, trial);
          const Permutation z1 = random_ncycle(n, rng);
          const Permutation z2 = random_ncycle(n, rng);
          const Permutation prod = compose(z1, z2);
          const CycleType t = cycle_type(prod);
          bool ok = true;
          for (int r = 1; r <= n && ok; ++r)
            if (t.nu[static_cast<size_t>(r)] > 0 && !a.contains(r)) ok = false;
          local += ok;
        }
        return local;
      },
      [](std::uint64_t x, std::uint64_t y) { return x + y; });
  McEstimate est;
  est.hits = hits;
  est.trials = trials;
  est.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) /
                            static_cast<double>(trials));
  return est;
}

BigInt count_no_backstep_cycles(int n, int threads, int guard) {
  check_guard(n, guard, "count_no_backstep_cycles");
  const NCycleStream stream(n);
  const std::uint64_t count = parallel_chunked_reduce<std::uint64_t>(
      stream.size(), threads, 0,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t local = 0;
        stream.for_each(begin, end, [&](const Permutation& p) {
          for (int i = 1; i <= n; ++i) {
            const int back = i == 1 ? n : i - 1;
            if (p(i) == back) return;
          }
          ++local;
        });
        return local;
      },
      [](std::uint64_t x, std::uint64_t y) { return x + y; });
  return BigInt(count);
}

BigInt count_one_odd_cycle(int n, int threads, int guard) {
  check_guard(n, guard, "count_one_odd_cycle");
  const int m = n + 1;  // the scan runs one size up
  const NCycleStream stream(m);
  const std::uint64_t count = parallel_chunked_reduce<std::uint64_t>(
      stream.size(), threads, 0,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t local = 0;
        std::vector<char> seen(static_cast<size_t>(m) + 1);
        stream.for_each(begin, end, [&](const Permutation& z) {
          int first_len = 0;
          walk_product_cycles(z, seen, [&](int len) {
            first_len = len;
            return false;  // a single m-cycle is decided by the first cycle
          });
          local += first_len == m;
        });
        return local;
      },
      [](std::uint64_t x, std::uint64_t y) { return x + y; });
  return BigInt(count);
}

}  // namespace cyclekit
