// Copyright 2026 The netcon Authors
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

#ifndef NETCON_SRC_PARALLEL_H_
#define NETCON_SRC_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace netcon::internal {

// Runs fn(i) for i in [begin, end) on up to `threads` workers. Items are
// handed out dynamically; callers must make fn's effects independent of the
// assignment. The first exception thrown by any worker is rethrown.
template <typename Fn>
void ParallelFor(size_t begin, size_t end, int threads, Fn&& fn) {
  const size_t count = end > begin ? end - begin : 0;
  const size_t workers =
      std::min<size_t>(count, static_cast<size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{begin};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    try {
      for (size_t i = next++; i < end; i = next++) fn(i);
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
      next = end;
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (size_t w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace netcon::internal

#endif  // NETCON_SRC_PARALLEL_H_
