#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <utility>
#include <vector>

namespace cyclekit {

// Worker count resolution: explicit request > 0 wins, then the
// CYCLEKIT_THREADS environment variable, then hardware concurrency.
int resolve_thread_count(int requested = 0);

// Splits [0, total) into at most `threads` contiguous chunks, evaluates
// `work(begin, end)` per chunk, and folds the results in chunk order.
// Reductions used in this library are exact sums, so the result is
// independent of the split; folding in order keeps even non-commutative
// merges deterministic.
template <typename R, typename Work, typename Merge>
R parallel_chunked_reduce(std::uint64_t total, int threads, R init,
                          Work&& work, Merge&& merge) {
  if (total == 0) return init;
  const std::uint64_t workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_thread_count(threads)), total);
  if (workers <= 1) {
    return merge(std::move(init), work(std::uint64_t{0}, total));
  }
  std::vector<std::future<R>> futures;
  futures.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    futures.push_back(std::async(std::launch::async, work, begin, end));
  }
  R acc = std::move(init);
  for (auto& f : futures) acc = merge(std::move(acc), f.get());
  return acc;
}

}  // namespace cyclekit
