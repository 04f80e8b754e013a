#pragma once

#include <thread>
#include <vector>

namespace triplex::detail {

// Splits [0, n) into contiguous chunks and runs body(chunk, begin, end), one
// chunk per worker thread. Chunk ids are dense from 0 so callers can keep a
// buffer per chunk and merge in order, which keeps reports deterministic.
template <typename Body>
void chunked_for(int n, int jobs, Body&& body) {
  if (n <= 0) return;
  int k = jobs < 1 ? 1 : jobs;
  if (k > n) k = n;
  if (k == 1) {
    body(0, 0, n);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(k));
  const int base = n / k, rem = n % k;
  int begin = 0;
  for (int c = 0; c < k; ++c) {
    const int end = begin + base + (c < rem ? 1 : 0);
    workers.emplace_back([&body, c, begin, end] { body(c, begin, end); });
    begin = end;
  }
  for (auto& w : workers) w.join();
}

inline int chunk_count(int n, int jobs) {
  if (n <= 0) return 0;
  int k = jobs < 1 ? 1 : jobs;
  return k > n ? n : k;
}

}  // namespace triplex::detail
