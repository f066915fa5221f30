#include "cyclekit/btd.hpp"

#include <array>
#include <atomic>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cyclekit/parallel.hpp"
#include "cyclekit/qformulas.hpp"

namespace cyclekit {

namespace {

constexpr std::uint8_t kUnvisited = 0xFF;

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// One-line images of the identity under each move; applying a move to any u
// is then the O(n) gather v[t] = u[pattern[t]].
std::vector<std::vector<int>> move_patterns(int n) {
  std::vector<std::vector<int>> patterns;
  const Permutation id(n);
  for (const auto& [i, j, k] : block_transposition_moves(n))
    patterns.push_back(apply_block_transposition(id, i, j, k).one_line());
  return patterns;
}

void unrank_into(int n, std::uint64_t rank, const std::uint64_t* fact,
                 int* out) {
  std::array<int, 16> pool;
  std::iota(pool.begin(), pool.begin() + n, 1);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = fact[n - 1 - i];
    const int digit = static_cast<int>(rank / f);
    rank %= f;
    out[i] = pool[static_cast<size_t>(digit)];
    for (int t = digit; t < n - 1 - i; ++t)
      pool[static_cast<size_t>(t)] = pool[static_cast<size_t>(t + 1)];
  }
}

std::uint64_t rank_of(int n, const int* u, const std::uint64_t* fact) {
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += u[j] < u[i];
    rank += static_cast<std::uint64_t>(smaller) * fact[n - 1 - i];
  }
  return rank;
}

}  // namespace

int DistanceTable::max_distance() const {
  int best = 0;
  for (std::uint8_t d : dist) best = std::max(best, static_cast<int>(d));
  return best;
}

int DistanceTable::at(const Permutation& u) const {
  if (u.size() != n)
    throw std::invalid_argument("distance table: size mismatch");
  return dist[static_cast<size_t>(lehmer_rank(u))];
}

Permutation apply_block_transposition(const Permutation& u, int i, int j,
                                      int k) {
  const int n = u.size();
  if (!(0 <= i && i < j && j < k && k <= n))
    throw std::invalid_argument("block transposition: need 0 <= i < j < k <= n");
  const std::vector<int>& src = u.one_line();
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n));
  out.insert(out.end(), src.begin(), src.begin() + i);
  out.insert(out.end(), src.begin() + j, src.begin() + k);
  out.insert(out.end(), src.begin() + i, src.begin() + j);
  out.insert(out.end(), src.begin() + k, src.end());
  return Permutation(std::move(out), Permutation::Unchecked{});
}

std::vector<std::array<int, 3>> block_transposition_moves(int n) {
  std::vector<std::array<int, 3>> moves;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) moves.push_back({i, j, k});
  return moves;
}

std::uint64_t lehmer_rank(const Permutation& u) {
  const int n = u.size();
  std::array<std::uint64_t, 17> fact{};
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * i;
  return rank_of(n, u.one_line().data(), fact.data());
}

Permutation lehmer_unrank(int n, std::uint64_t rank) {
  if (n < 1 || n > 16) throw std::invalid_argument("lehmer_unrank: bad size");
  std::array<std::uint64_t, 17> fact{};
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * i;
  if (rank >= fact[static_cast<size_t>(n)])
    throw std::out_of_range("lehmer_unrank: rank");
  std::vector<int> image(static_cast<size_t>(n));
  unrank_into(n, rank, fact.data(), image.data());
  return Permutation(std::move(image), Permutation::Unchecked{});
}

DistanceTable btd_bfs(int n, int threads, int guard) {
  if (n < 1) throw std::invalid_argument("btd_bfs: n must be >= 1");
  if (n > guard)
    throw std::domain_error("btd_bfs: size guard exceeded (raise it "
                            "explicitly to search larger sizes)");
  const std::uint64_t total = factorial_u64(n);
  std::array<std::uint64_t, 17> fact{};
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * i;

  const auto patterns = move_patterns(n);
  auto dist = std::make_unique<std::atomic<std::uint8_t>[]>(total);
  for (std::uint64_t r = 0; r < total; ++r)
    dist[r].store(kUnvisited, std::memory_order_relaxed);

  std::vector<std::uint64_t> frontier{lehmer_rank(Permutation(n))};
  dist[frontier[0]].store(0, std::memory_order_relaxed);

  std::uint8_t level = 0;
  while (!frontier.empty()) {
    const std::uint8_t next_level = static_cast<std::uint8_t>(level + 1);
    using Frontier = std::vector<std::uint64_t>;
    Frontier next = parallel_chunked_reduce<Frontier>(
        frontier.size(), threads, Frontier{},
        [&](std::uint64_t begin, std::uint64_t end) {
          Frontier local;
          std::array<int, 16> u;
          std::array<int, 16> v;
          for (std::uint64_t idx = begin; idx < end; ++idx) {
            unrank_into(n, frontier[idx], fact.data(), u.data());
            for (const auto& pattern : patterns) {
              for (int t = 0; t < n; ++t)
                v[static_cast<size_t>(t)] =
                    u[static_cast<size_t>(pattern[static_cast<size_t>(t)] - 1)];
              const std::uint64_t r = rank_of(n, v.data(), fact.data());
              std::uint8_t expected = kUnvisited;
              if (dist[r].compare_exchange_strong(expected, next_level,
                                                  std::memory_order_relaxed))
                local.push_back(r);
            }
          }
          return local;
        },
        [](Frontier acc, Frontier part) {
          acc.insert(acc.end(), part.begin(), part.end());
          return acc;
        });
    frontier = std::move(next);
    level = next_level;
  }

  DistanceTable table;
  table.n = n;
  table.dist.resize(total);
  for (std::uint64_t r = 0; r < total; ++r)
    table.dist[r] = dist[r].load(std::memory_order_relaxed);
  return table;
}

std::map<int, std::uint64_t> btd_distribution(const DistanceTable& table) {
  std::map<int, std::uint64_t> hist;
  for (std::uint8_t d : table.dist) ++hist[static_cast<int>(d)];
  return hist;
}

LowerBoundReport verify_lower_bound(int n, int threads, int guard) {
  const DistanceTable table = btd_bfs(n, threads, guard);
  LowerBoundReport report;
  report.n = n;
  report.threshold = (n + 2) / 2;  // ceil((n+1)/2)
  for (std::uint8_t d : table.dist)
    if (static_cast<int>(d) >= report.threshold) ++report.count_hard;
  report.bound = q_even(n + 1).numerator_count;  // q * n!, exact
  report.vacuous = report.bound == 0;
  report.holds = BigInt(report.count_hard) >= report.bound;
  return report;
}

}  // namespace cyclekit
