#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace rsplit::detail {

/// Splits [begin, end) into contiguous chunks, runs body(chunk_begin,
/// chunk_end) on up to `threads` workers and returns the
/// per-chunk results in chunk order.
template <class Result, class Body>
std::vector<Result> scan_chunks(std::uint64_t begin, std::uint64_t end, unsigned threads,
                                Body body) {
  threads = std::max(1u, threads);
  const std::uint64_t total = end > begin ? end - begin : 0;
  if (threads == 1 || total < 4096) {
    std::vector<Result> out(1);
    out[0] = body(begin, end);
    return out;
  }
  std::vector<Result> out(threads);
  std::vector<std::thread> pool;
  const std::uint64_t step = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = begin + std::min<std::uint64_t>(total, step * t);
    const std::uint64_t hi = begin + std::min<std::uint64_t>(total, step * (t + 1));
    pool.emplace_back([&, lo, hi, t] { out[t] = body(lo, hi); });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace rsplit::detail
