// Copyright 2026 The mixkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIXKIT_PARALLEL_HPP_
#define MIXKIT_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace mixkit {

// 0 means "use the hardware parallelism".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Calls fn(i) for every i in [0, n), splitting the range into contiguous
// blocks across up to `threads` workers. fn must only write to per-index
// state, so the outcome does not depend on the worker count. The first
// exception (in block order) is rethrown after all workers join.
template <class Fn>
void parallel_for(std::int64_t n, unsigned threads, Fn&& fn) {
  if (n <= 0) return;
  const auto workers = static_cast<std::int64_t>(
      std::min<std::int64_t>(resolve_threads(threads), n));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w) {
      const std::int64_t begin = n * w / workers;
      const std::int64_t end = n * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          for (std::int64_t i = begin; i < end; ++i) fn(i);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mixkit

#endif  // MIXKIT_PARALLEL_HPP_
