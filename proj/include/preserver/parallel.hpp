/*
 * Copyright 2026 The Preserver Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace preserver {

enum class Execution { Serial, Parallel };

/// Worker count: omp_get_max_threads(), capped by PRESERVER_THREADS when set.
int thread_count();

/// Runs body(i) for i in [0, n). Iterations must be independent; the first
/// exception thrown by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body, Execution exec = Execution::Parallel) {
  if (exec == Execution::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex mu;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (long i = 0; i < count; ++i) {
    {
      std::lock_guard lock(mu);
      if (error) continue;
    }
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace preserver
