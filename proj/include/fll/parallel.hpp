#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace fll {

// Resolves a requested worker count; 0 means "one per hardware thread".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, count) into contiguous chunks, evaluates chunk_fn(begin, end) on
// a pool of workers and folds the per-chunk results left to right with merge.
// With an associative merge the result does not depend on the worker count.
template <typename T, typename ChunkFn, typename MergeFn>
T parallel_reduce(std::uint64_t count, unsigned workers, T init, ChunkFn chunk_fn,
                  MergeFn merge) {
  workers = resolve_workers(workers);
  if (count == 0) return init;
  if (workers == 1) return merge(std::move(init), chunk_fn(std::uint64_t{0}, count));

  const std::uint64_t chunk_count = std::min<std::uint64_t>(count, std::uint64_t{workers} * 8);
  const std::uint64_t base = count / chunk_count;
  const std::uint64_t extra = count % chunk_count;
  auto bounds = [&](std::uint64_t c) {
    const std::uint64_t begin = c * base + std::min(c, extra);
    return std::pair{begin, begin + base + (c < extra ? 1 : 0)};
  };

  std::vector<std::optional<T>> results(chunk_count);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::uint64_t c = next++; c < chunk_count; c = next++) {
      try {
        const auto [begin, end] = bounds(c);
        results[c].emplace(chunk_fn(begin, end));
      } catch (...) {
        std::lock_guard lock{failure_mutex};
        if (!failure) failure = std::current_exception();
        next = chunk_count;
      }
    }
  };

  std::vector<std::thread> pool;
  const unsigned spawned = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunk_count));
  pool.reserve(spawned);
  for (unsigned w = 0; w < spawned; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  T acc = std::move(init);
  for (auto& r : results) acc = merge(std::move(acc), std::move(*r));
  return acc;
}

// Evaluates fn(i) for every i in [0, count) into a vector, in index order.
template <typename Fn>
auto parallel_map(std::uint64_t count, unsigned workers, Fn fn) {
  using R = decltype(fn(std::uint64_t{0}));
  static_assert(!std::is_same_v<R, bool>, "vector<bool> is not safe for concurrent writes");
  std::vector<R> out(count);
  parallel_reduce(
      count, workers, 0,
      [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) out[i] = fn(i);
        return 0;
      },
      [](int a, int) { return a; });
  return out;
}

}  // namespace fll
