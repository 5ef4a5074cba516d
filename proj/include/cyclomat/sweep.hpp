// Copyright 2026 The Authors.
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

#ifndef CYCLOMAT_SWEEP_HPP
#define CYCLOMAT_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cyclomat {

// Exhaustive sweeps refuse inputs beyond these sizes instead of truncating.
struct EnumerationLimits {
  std::size_t basis_ground = 32;
  std::size_t tutte_ground = 20;
  std::size_t forest_edges = 20;
  std::size_t exhaustive_duality_n = 20;
};

struct SweepOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  EnumerationLimits limits;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_within(std::size_t size, std::size_t limit,
                           const char* what) {
  if (size > limit)
    throw LimitExceeded(std::string(what) + ": size " + std::to_string(size) +
                        " exceeds enumeration limit " + std::to_string(limit));
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(task) for task in [0, tasks) on up to `threads` workers. Callers
// store per-task results by index and merge in index order, so the outcome
// does not depend on scheduling. The lowest-indexed exception is rethrown.
template <class Fn>
void parallel_for(std::size_t tasks, unsigned threads, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), tasks));
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) fn(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < tasks; t = next++) {
          try {
            fn(t);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace cyclomat

#endif  // CYCLOMAT_SWEEP_HPP
