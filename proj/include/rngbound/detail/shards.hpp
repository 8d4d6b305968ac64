#pragma once

// Fixed-shard execution. The shard layout depends only on the problem size,
// never on the thread count, so reductions over shard results taken in shard
// order are reproducible bit-for-bit.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <span>
#include <thread>
#include <vector>

namespace rngbound::detail {

inline constexpr std::uint64_t kShardSize = std::uint64_t{1} << 12;

// Calls f(begin, end) for each shard of [0, total) and returns the results
// in shard order.
template <class R, class F>
std::vector<R> map_shards(std::uint64_t total, F&& f) {
  const std::uint64_t count = (total + kShardSize - 1) / kShardSize;
  std::vector<R> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t s; (s = next.fetch_add(1)) < count;) {
      try {
        const auto begin = s * kShardSize;
        results[s] = f(begin, std::min(total, begin + kShardSize));
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::uint64_t>(
      std::max(1u, std::thread::hardware_concurrency()));
  const auto extra = std::min(threads, count) - (count ? 1 : 0);
  std::vector<std::thread> pool;
  for (std::uint64_t t = 0; t < extra; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

// Pairwise sum in a fixed tree shape.
inline double tree_sum(std::span<const double> v) {
  if (v.empty()) return 0.0;
  if (v.size() == 1) return v[0];
  const auto half = v.size() / 2;
  return tree_sum(v.first(half)) + tree_sum(v.subspan(half));
}

}  // namespace rngbound::detail
