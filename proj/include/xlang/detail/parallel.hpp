// Copyright 2026 The xlang Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef XLANG_DETAIL_PARALLEL_HPP
#define XLANG_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace xlang::detail {

/// Evaluates `fn(i)` for i in [0, n) and returns the result for the smallest
/// i whose result is engaged. With `jobs > 1` the range is scanned in blocks
/// by a worker pool; blocks past the best hit so far are skipped, so the
/// answer matches the serial scan.
template <class Fn>
auto first_hit(std::size_t n, unsigned jobs, Fn&& fn) -> decltype(fn(std::size_t{})) {
  using Result = decltype(fn(std::size_t{}));
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto r = fn(i)) return r;
    }
    return Result{};
  }
  const std::size_t block = std::max<std::size_t>(1, n / (std::size_t{jobs} * 16));
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  std::mutex mu;
  Result best_result{};
  auto worker = [&] {
    while (true) {
      const std::size_t start = next.fetch_add(block);
      if (start >= n || start >= best.load()) return;
      const std::size_t end = std::min(n, start + block);
      for (std::size_t i = start; i < end && i < best.load(); ++i) {
        if (auto r = fn(i)) {
          std::lock_guard<std::mutex> lock(mu);
          if (i < best.load()) {
            best.store(i);
            best_result = std::move(r);
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned extra = std::min<unsigned>(jobs, static_cast<unsigned>(n)) - 1;
  pool.reserve(extra);
  for (unsigned t = 0; t < extra; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return best_result;
}

}  // namespace xlang::detail

#endif  // XLANG_DETAIL_PARALLEL_HPP
