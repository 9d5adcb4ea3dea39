#pragma once

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

namespace sieve {

/// Counts items satisfying pred, splitting the range across up to `jobs`
/// threads. pred must be safe to call concurrently.
template <class T, class Pred>
unsigned long parallel_count(const std::vector<T>& items, int jobs, Pred pred) {
  auto count_range = [&](std::size_t lo, std::size_t hi) {
    unsigned long c = 0;
    for (std::size_t i = lo; i < hi; ++i) c += pred(items[i]) ? 1 : 0;
    return c;
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(items.size() / 64) + 1));
  if (jobs == 1) return count_range(0, items.size());
  std::vector<unsigned long> partial(jobs, 0);
  std::vector<std::thread> workers;
  const std::size_t chunk = (items.size() + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    const std::size_t lo = std::min(items.size(), j * chunk);
    const std::size_t hi = std::min(items.size(), lo + chunk);
    workers.emplace_back([&, j, lo, hi] { partial[j] = count_range(lo, hi); });
  }
  for (auto& w : workers) w.join();
  return std::accumulate(partial.begin(), partial.end(), 0UL);
}

}  // namespace sieve
