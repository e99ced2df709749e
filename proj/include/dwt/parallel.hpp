#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace dwt {

/// Splits [0, n) into contiguous chunks, one per worker, and sums the exact
/// integer per-chunk results in worker order. The total is independent of
/// the worker count.
inline std::uint64_t parallel_count(
    std::uint64_t n, int threads,
    const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& chunk) {
  if (n == 0) return 0;
  std::uint64_t workers = threads < 1 ? 1 : static_cast<std::uint64_t>(threads);
  if (workers > n) workers = n;
  if (workers == 1) return chunk(0, n);

  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::uint64_t base = n / workers, rem = n % workers, begin = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    std::uint64_t len = base + (w < rem ? 1 : 0);
    pool.emplace_back(
        [&partial, &chunk, w, begin, len] { partial[w] = chunk(begin, begin + len); });
    begin += len;
  }
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

/// Same, but each chunk fills a bucket vector of exact integer counts.
/// Buckets are added in worker order.
inline std::vector<std::uint64_t> parallel_bucket_count(
    std::uint64_t n, int threads, std::size_t buckets,
    const std::function<void(std::uint64_t, std::uint64_t, std::vector<std::uint64_t>&)>&
        chunk) {
  std::vector<std::uint64_t> total(buckets, 0);
  if (n == 0) return total;
  std::uint64_t workers = threads < 1 ? 1 : static_cast<std::uint64_t>(threads);
  if (workers > n) workers = n;
  if (workers == 1) {
    chunk(0, n, total);
    return total;
  }
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(buckets, 0));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::uint64_t base = n / workers, rem = n % workers, begin = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    std::uint64_t len = base + (w < rem ? 1 : 0);
    pool.emplace_back(
        [&partial, &chunk, w, begin, len] { chunk(begin, begin + len, partial[w]); });
    begin += len;
  }
  for (auto& t : pool) t.join();
  for (auto& p : partial)
    for (std::size_t i = 0; i < buckets; ++i) total[i] += p[i];
  return total;
}

}  // namespace dwt
