// Copyright 2026 The framesim Authors
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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace framesim {

/// Below this many items a loop runs on the calling thread.
inline constexpr std::size_t kParallelGrain = 512;

namespace detail {
inline std::atomic<std::size_t> worker_count{1};
}  // namespace detail

inline void set_worker_count(std::size_t workers) {
  detail::worker_count.store(std::max<std::size_t>(1, workers));
}

inline std::size_t worker_count() { return detail::worker_count.load(); }

/**
 * Splits [0, count) into contiguous chunks and runs body(begin, end) on each.
 *
 * Chunk boundaries depend only on count and the worker setting, and each
 * chunk writes a disjoint slice, so results never depend on scheduling.
 */
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers =
      std::min(worker_count(), count / (kParallelGrain / 2) + 1);
  if (workers <= 1 || count < kParallelGrain) {
    body(std::size_t{0}, count);
    return;
  }
  const std::size_t step = (count + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * step);
    const std::size_t end = std::min(count, begin + step);
    threads.emplace_back([&, w, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  try {
    body(std::size_t{0}, std::min(count, step));
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace framesim
