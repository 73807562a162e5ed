#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace tbc {

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs produce(i) for i in [begin, end) on up to `threads` workers and hands
// the results to consume(i, value) strictly in index order. consume returns
// false to stop early; items past the stopping index may have been produced
// but are never consumed. Work proceeds in chunks so at most `chunk` results
// are buffered.
template <class Produce, class Consume>
void ordered_parallel_for(std::uint64_t begin, std::uint64_t end, unsigned threads,
                          std::size_t chunk, Produce&& produce, Consume&& consume) {
  threads = resolve_threads(threads);
  if (threads <= 1) {
    for (auto i = begin; i < end; ++i) {
      if (!consume(i, produce(i))) return;
    }
    return;
  }
  using Value = decltype(produce(begin));
  chunk = std::max<std::size_t>(chunk, threads);
  for (auto base = begin; base < end; base += chunk) {
    const auto count = static_cast<std::size_t>(std::min<std::uint64_t>(chunk, end - base));
    std::vector<std::optional<Value>> results(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> workers;
      const auto spawn = std::min<std::size_t>(threads, count);
      workers.reserve(spawn);
      for (std::size_t w = 0; w < spawn; ++w) {
        workers.emplace_back([&] {
          for (auto k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
            try {
              results[k].emplace(produce(base + k));
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t k = 0; k < count; ++k) {
      if (!consume(base + k, std::move(*results[k]))) return;
    }
  }
}

}  // namespace tbc
