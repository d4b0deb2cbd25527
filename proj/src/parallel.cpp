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

#include "preserver/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace preserver {

int thread_count() {
  int n = omp_get_max_threads();
  if (const char* cap = std::getenv("PRESERVER_THREADS")) {
    try {
      const int c = std::stoi(cap);
      if (c >= 1) n = std::min(n, c);
    } catch (const std::exception&) {
      // Ignore malformed values.
    }
  }
  return std::max(n, 1);
}

}  // namespace preserver
