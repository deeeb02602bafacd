#pragma once

// Bounded worker-pool helper.  Work items are indexed so callers can write
// results into preallocated slots; output order is therefore deterministic
// regardless of the thread count.

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace cybmw {

// Thread cap: CYBMW_THREADS if set (clamped to 1..64), else the hardware
// concurrency, else 1.
inline int thread_cap() {
  if (const char* env = std::getenv("CYBMW_THREADS")) {
    try {
      int v = std::stoi(std::string(env));
      if (v < 1) v = 1;
      if (v > 64) v = 64;
      return v;
    } catch (...) {
    }
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(0..jobs-1) on up to `threads` workers; rethrows the first exception.
template <class Fn>
void run_indexed(int jobs, int threads, Fn&& fn) {
  if (jobs <= 0) return;
  if (threads > jobs) threads = jobs;
  if (threads <= 1) {
    for (int i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          int i = next.fetch_add(1);
          if (i >= jobs) return;
          fn(i);
        }
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace cybmw
