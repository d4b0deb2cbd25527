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

#include <doctest.h>

#include <atomic>

#include "preserver/bruteforce.hpp"

using namespace preserver;

TEST_CASE("general linear group orders") {
  CHECK(gl_order(1, 5) == 4);
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(2, 5) == 480);
  CHECK(gl_order(3, 3) == 11232);
}

TEST_CASE("enumeration visits exactly the invertible matrices") {
  for (auto [dim, p] : {std::pair<std::size_t, std::uint64_t>{1, 5}, {2, 3}, {2, 5}, {3, 3}}) {
    for (Execution e : {Execution::Serial, Execution::Parallel}) {
      std::atomic<std::uint64_t> count{0};
      enumerate_invertible(dim, p, [&](std::size_t, const SmallMatrix&) { ++count; }, e);
      CHECK(count.load() == gl_order(dim, p));
    }
  }
  CHECK_THROWS_AS(enumerate_invertible(4, 5, [](std::size_t, const SmallMatrix&) {}), std::invalid_argument);
}

TEST_CASE("scalar fixer census") {
  const CensusReport r = case_scalar_fixer(Execution::Serial);
  CHECK(r.passed);
  CHECK(r.counts.at("invertible_maps") == 11232);
  CHECK(r.counts.at("fixers") == 2);
}

TEST_CASE("cubic oracle census") {
  const CensusReport r = case_cubic_oracles_f5();
  CHECK(r.passed);
  CHECK(r.counts.at("minimal_rank") == 24);
  CHECK(r.counts.at("disagreements") == 0);
}

TEST_CASE("cubic preserver census") {
  const CensusReport serial = case_cubic_preserver_census_f5(Execution::Serial);
  const CensusReport parallel = case_cubic_preserver_census_f5(Execution::Parallel);
  CHECK(serial.passed);
  CHECK(serial.counts == parallel.counts);
  CHECK(serial.counts.at("filtered_pairs") == 960);
  CHECK(serial.counts.at("distinct_induced_maps") == 240);
  CHECK(serial.counts.at("exceptions") == 0);
}

TEST_CASE("unknown case") { CHECK_THROWS_AS(run_bruteforce_case("no-such-case"), std::invalid_argument); }
