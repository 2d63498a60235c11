#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace spectra {

/// Worker cap: SPECTRA_KIT_THREADS when set (>=1), else hardware concurrency.
inline int thread_cap() {
  if (const char* env = std::getenv("SPECTRA_KIT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? (int)hc : 1;
}

/// Runs f(i) for i in [0,n). Work is split into contiguous chunks; callers
/// write results into pre-sized slots and reduce in index order afterwards,
/// which keeps every reported number independent of the thread count.
template <class F>
void parallel_for(std::size_t n, F&& f, int max_threads = 0) {
  int workers = max_threads > 0 ? max_threads : thread_cap();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  workers = (int)std::min<std::size_t>(workers, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &f] {
      for (std::size_t i = lo; i < hi; ++i) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace spectra
