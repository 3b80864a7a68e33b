// Copyright 2026 The wcpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WCPOWER_PARALLEL_HPP
#define WCPOWER_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wcpower {

/// 0 means one worker per hardware thread.
inline unsigned resolve_workers(unsigned requested) noexcept {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into fixed-size chunks and hands them to `workers`
/// threads. `fn(begin, end, chunk_index)` must only touch state owned by its
/// chunk. The first exception thrown by any chunk is rethrown here.
template <class ChunkFn>
void parallel_chunks(std::uint64_t total, std::uint64_t chunk_size, unsigned workers, ChunkFn&& fn) {
  if (total == 0) return;
  chunk_size = std::max<std::uint64_t>(chunk_size, 1);
  const std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;
  const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), chunks));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (;;) {
      const std::uint64_t k = next.fetch_add(1, std::memory_order_relaxed);
      if (k >= chunks) return;
      const std::uint64_t begin = k * chunk_size;
      const std::uint64_t end = std::min(total, begin + chunk_size);
      try {
        fn(begin, end, k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
      }
    }
  };

  if (threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
  }
  if (failure) std::rethrow_exception(failure);
}

/// Per-chunk results are stored by chunk index and folded in index order,
/// so the outcome does not depend on how chunks were scheduled.
template <class Result, class ChunkFn, class Merge>
Result chunked_reduce(std::uint64_t total, std::uint64_t chunk_size, unsigned workers, Result init, ChunkFn&& fn,
                      Merge&& merge) {
  chunk_size = std::max<std::uint64_t>(chunk_size, 1);
  const std::uint64_t chunks = total == 0 ? 0 : (total + chunk_size - 1) / chunk_size;
  std::vector<Result> partial(chunks, init);
  parallel_chunks(total, chunk_size, workers, [&](std::uint64_t begin, std::uint64_t end, std::uint64_t k) {
    partial[k] = fn(begin, end, k);
  });
  Result acc = std::move(init);
  for (auto& p : partial) acc = merge(std::move(acc), std::move(p));
  return acc;
}

}  // namespace wcpower

#endif  // WCPOWER_PARALLEL_HPP
