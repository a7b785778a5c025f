// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#include "parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace conslaw {

namespace {
std::atomic<int> g_jobs{0};
}

int default_jobs() {
  const int set = g_jobs.load();
  if (set > 0) return set;
  if (const char* env = std::getenv("CONSLAW_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void set_default_jobs(int jobs) { g_jobs.store(jobs); }

}  // namespace conslaw
