#pragma once

// Deterministic chunked parallel-for. Work is split into fixed chunks,
// workers pull chunks by atomic counter, and callers combine per-chunk
// results in chunk order so output never depends on the worker count.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cyclotomix {

// Worker count: explicit hint > CYCLOTOMIX_THREADS > hardware concurrency.
inline int resolve_threads(int hint = 0) {
  if (hint > 0) return hint;
  if (const char* env = std::getenv("CYCLOTOMIX_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Calls body(chunk_index, begin, end) for consecutive ranges covering
// [0, total). Bodies must not touch shared mutable state; combine results
// per chunk index afterwards.
inline void parallel_chunks(std::int64_t total, std::int64_t chunk_size, int threads,
                            const std::function<void(std::size_t, std::int64_t, std::int64_t)>& body) {
  if (total <= 0) return;
  if (chunk_size < 1) chunk_size = 1;
  const std::size_t n_chunks = static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
  const int workers = std::min<std::int64_t>(resolve_threads(threads), static_cast<std::int64_t>(n_chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      const std::int64_t lo = static_cast<std::int64_t>(c) * chunk_size;
      body(c, lo, std::min(total, lo + chunk_size));
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    try {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= n_chunks || failed.load()) return;
        const std::int64_t lo = static_cast<std::int64_t>(c) * chunk_size;
        body(c, lo, std::min(total, lo + chunk_size));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int i = 1; i < workers; ++i) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cyclotomix
