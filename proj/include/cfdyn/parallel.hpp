// Copyright 2026 The cfdyn Authors.
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

#ifndef CFDYN_PARALLEL_HPP_
#define CFDYN_PARALLEL_HPP_

#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cfdyn {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Applies fn(block_index, begin, end) over fixed-size blocks of [0, n).
// The block partition is independent of the worker count, so any
// per-block results reduced in block-index order are deterministic.
// Workers must not touch shared floating-point state (precision is
// process-global; set it before calling).
inline void parallel_blocks(
    std::int64_t n, std::int64_t block, int threads,
    const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  if (block < 1) block = 1;
  std::int64_t n_blocks = (n + block - 1) / block;
  threads = resolve_threads(threads);
  if (threads > n_blocks) threads = static_cast<int>(n_blocks);

  auto run_range = [&](std::int64_t b) {
    std::int64_t begin = b * block;
    std::int64_t end = std::min(n, begin + block);
    fn(b, begin, end);
  };

  if (threads <= 1) {
    for (std::int64_t b = 0; b < n_blocks; ++b) run_range(b);
    return;
  }

  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::int64_t b = w; b < n_blocks; b += threads) run_range(b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cfdyn

#endif  // CFDYN_PARALLEL_HPP_
