// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace conslaw {

// Worker count: explicit setting > CONSLAW_JOBS env > hardware concurrency.
int default_jobs();
void set_default_jobs(int jobs);

// Static chunked parallel for. Workers write to disjoint indices, so results
// do not depend on the worker count; any exception is rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, int jobs = 0) {
  if (jobs <= 0) jobs = default_jobs();
  const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), n ? n : 1);
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t wkr = 0; wkr < workers; ++wkr) {
    const std::size_t lo = wkr * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace conslaw
