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

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "preserver/parallel.hpp"

namespace preserver {

/// Exhaustive census over a small prime field. Counts are exact; `passed`
/// requires every entry of `expected` to match `counts`.
struct CensusReport {
  std::string case_id;
  std::string field;
  std::uint64_t total = 0;
  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, std::uint64_t> expected;
  bool passed = false;
  double elapsed_seconds = 0;

  void finalize();
};

/// Row-major entries of a dim x dim matrix over F_p, each in [0, p).
using SmallMatrix = std::vector<std::uint32_t>;

/// prod_{i<dim} (p^dim - p^i).
std::uint64_t gl_order(std::size_t dim, std::uint64_t p);

/**
 * Visits every invertible dim x dim matrix over F_p exactly once, in row-major
 * lexicographic order, pruning rows in the span of earlier rows. The budget
 * guard rejects p^(dim^2) > 10^9. The callback receives a chunk index (the
 * first row, as a base-p number) so parallel callers can keep per-chunk state.
 */
void enumerate_invertible(std::size_t dim, std::uint64_t p,
                          const std::function<void(std::size_t chunk, const SmallMatrix&)>& visit,
                          Execution exec = Execution::Serial);

/// Number of chunks enumerate_invertible splits the work into (p^dim first rows).
std::size_t invertible_chunks(std::size_t dim, std::uint64_t p);

/// All invertible maps of Symm_2(F_3) that fix every rank-1 line; expects the 2 scalars.
CensusReport case_scalar_fixer(Execution exec = Execution::Parallel);
/// All 625 binary cubics over F_5 through the three minimality oracles; expects 24 minimal.
CensusReport case_cubic_oracles_f5(Execution exec = Execution::Parallel);
/// All (c, g) in F_5^x x GL_2(F_5): exactly the pairs with c^4 det(g)^6 = 1 preserve the discriminant.
CensusReport case_cubic_preserver_census_f5(Execution exec = Execution::Parallel);

const std::vector<std::string>& bruteforce_cases();
/// Throws std::invalid_argument for unknown ids.
CensusReport run_bruteforce_case(const std::string& id, Execution exec = Execution::Parallel);

}  // namespace preserver
