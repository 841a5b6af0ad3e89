// Copyright 2026 The szverify Authors.
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

#ifndef SUZUKI_PARALLEL_HPP_
#define SUZUKI_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace suzuki {

// Splits [0, n) into min(jobs, n) contiguous chunks and runs
// fn(chunk_index, begin, end) for each, one thread per chunk. Chunk
// boundaries depend only on (jobs, n), so callers that merge per-chunk
// output in chunk order get a schedule-independent result. The first
// exception thrown by any chunk is rethrown after all threads join.
template <typename Fn>
std::size_t parallel_chunks(unsigned jobs, std::size_t n, Fn&& fn) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  auto bounds = [&](std::size_t c) { return n * c / chunks; };
  if (chunks == 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return 1;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    workers.emplace_back([&, c] {
      try {
        fn(c, bounds(c), bounds(c + 1));
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (std::thread& w : workers) w.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return chunks;
}

// Number of chunks parallel_chunks will use; size per-chunk output buffers
// with this.
inline std::size_t chunk_count(unsigned jobs, std::size_t n) {
  return std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
}

}  // namespace suzuki

#endif  // SUZUKI_PARALLEL_HPP_
