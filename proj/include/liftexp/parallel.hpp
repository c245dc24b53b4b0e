#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "liftexp/integer.hpp"

namespace liftexp {

// Runs work(chunk) for chunk = 0..n_chunks-1 on `workers` threads and hands
// each result to merge(chunk, result) strictly in chunk order. The chunk
// decomposition is fixed by the caller and independent of the worker count,
// so the merged output is identical for any number of workers. merge runs
// under a lock; emission and checkpoint writes stay serialized.
template <typename Result>
void run_chunked(u64 n_chunks, unsigned workers, const std::function<Result(u64)>& work,
                 const std::function<void(u64, Result&)>& merge) {
  if (n_chunks == 0) return;
  if (workers < 1) workers = 1;

  std::atomic<u64> next{0};
  std::mutex mu;
  std::map<u64, Result> pending;
  u64 merged = 0;
  std::exception_ptr failure;

  auto body = [&]() {
    while (true) {
      const u64 chunk = next.fetch_add(1);
      if (chunk >= n_chunks) return;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure) return;
      }
      try {
        Result r = work(chunk);
        std::lock_guard<std::mutex> lock(mu);
        pending.emplace(chunk, std::move(r));
        while (!pending.empty() && pending.begin()->first == merged) {
          merge(merged, pending.begin()->second);
          pending.erase(pending.begin());
          ++merged;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

} // namespace liftexp
