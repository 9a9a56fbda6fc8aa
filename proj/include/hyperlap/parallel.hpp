#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace hyperlap {

/// Worker count: hardware concurrency, capped by the HYPERLAP_THREADS
/// environment variable when it is set to a positive integer.
inline unsigned thread_budget() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("HYPERLAP_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0 && static_cast<unsigned>(cap) < n)
      n = static_cast<unsigned>(cap);
  }
  return n;
}

/// Runs body(i) for i in [0, count).  Results must be written to
/// index-addressed storage; the split across threads is not part of the
/// output contract.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_budget(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace hyperlap
