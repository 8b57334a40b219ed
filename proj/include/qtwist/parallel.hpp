#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <thread>
#include <vector>

namespace qtwist {

/// Worker count used by the enumeration loops; 0 means one per hardware thread.
inline std::atomic<unsigned>& default_threads() {
  static std::atomic<unsigned> n{1};
  return n;
}

/// Sum of body(i) over i in [0, n), split into contiguous chunks. Integer
/// addition is associative, so the result does not depend on the split.
template <class Body>
std::uint64_t parallel_sum(std::uint64_t n, Body body, unsigned threads = 0) {
  if (threads == 0) threads = default_threads().load();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  auto run = [&body](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t acc = 0;
    for (std::uint64_t i = lo; i < hi; ++i) acc += body(i);
    return acc;
  };
  if (threads <= 1 || n < 4096) return run(0, n);
  std::vector<std::future<std::uint64_t>> parts;
  const std::uint64_t chunk = (n + threads - 1) / threads;
  for (std::uint64_t lo = 0; lo < n; lo += chunk)
    parts.push_back(std::async(std::launch::async, run, lo, std::min(n, lo + chunk)));
  std::uint64_t total = 0;
  for (auto& p : parts) total += p.get();
  return total;
}

}  // namespace qtwist
