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

#include "preserver/minimality.hpp"

using namespace preserver;

namespace {

const Field kQ = Field::rationals();
const Field kF7 = Field::prime(7);

const char* const kForms[] = {"symm-det:3", "skew-pf:6", "square-det:3", "quadric:4", "cubic-disc",
                              "wedge36",    "sp6",       "mat2n:4",      "hyperdet"};

RepVector cubic(const Field& f, std::initializer_list<std::int64_t> xs) {
  std::vector<FieldElement> c;
  for (auto x : xs) c.push_back(f.from_int(x));
  return RepVector(Space::cubic(), c);
}

}  // namespace

TEST_CASE("oracle names") {
  CHECK(parse_oracle("rrs") == Oracle::Rrs);
  CHECK(oracle_name(Oracle::Radical) == "radical");
  CHECK_THROWS(parse_oracle("spinor"));
}

TEST_CASE("oracle scope") {
  const InvariantForm symm = InvariantForm::symm_det(3, kQ);
  CHECK(oracle_applies(Oracle::Rrs, symm));
  CHECK_FALSE(oracle_applies(Oracle::Radical, symm));
  CHECK(oracle_applies(Oracle::Radical, InvariantForm::wedge36(kQ)));
  CHECK_THROWS(minimal_by_radical(symm, RepVector::zero(symm.space(), kQ)));
}

TEST_CASE("cubes of linear forms") {
  const InvariantForm d = InvariantForm::cubic_disc(kQ);
  CHECK(minimal_by_rank(d, cubic(kQ, {1, 0, 0, 0})).is_minimal);
  CHECK(minimal_by_rank(d, cubic(kQ, {0, 0, 0, 5})).is_minimal);
  // (x + y)^3
  CHECK(minimal_by_rank(d, cubic(kQ, {1, 3, 3, 1})).is_minimal);
  CHECK(minimal_by_rrs(d, cubic(kQ, {1, 3, 3, 1})).is_minimal);
  CHECK(minimal_by_radical(d, cubic(kQ, {1, 3, 3, 1})).is_minimal);
  // x^2 y is not a cube
  CHECK_FALSE(minimal_by_rank(d, cubic(kQ, {0, 1, 0, 0})).is_minimal);
  CHECK_FALSE(minimal_by_rrs(d, cubic(kQ, {0, 1, 0, 0})).is_minimal);
  CHECK_FALSE(minimal_by_radical(d, cubic(kQ, {0, 1, 0, 0})).is_minimal);
  CHECK_FALSE(minimal_by_rank(d, cubic(kQ, {0, 0, 0, 0})).is_minimal);
}

TEST_CASE("rank-one symmetric matrix is minimal") {
  const InvariantForm f = InvariantForm::symm_det(3, kQ);
  RepVector e11 = RepVector::zero(f.space(), kQ);
  e11.coords[0] = kQ.one();
  CHECK(minimal_by_rank(f, e11).is_minimal);
  CHECK(minimal_by_rrs(f, e11).is_minimal);
  e11.coords[3] = kQ.one();
  CHECK_FALSE(minimal_by_rank(f, e11).is_minimal);
  CHECK_FALSE(minimal_by_rrs(f, e11).is_minimal);
}

TEST_CASE("symbolic degree test is limited to ten coordinates") {
  const InvariantForm f = InvariantForm::symm_det(5, kQ);
  Rng rng(1);
  CHECK_THROWS(minimal_by_rrs(f, sample_minimal(f, rng)));
  RrsPolicy random;
  random.exact = false;
  CHECK(minimal_by_rrs(f, sample_minimal(f, rng), random).is_minimal);
  random.trials = 8;
  CHECK_THROWS(minimal_by_rrs(InvariantForm::cubic_disc(kF7), cubic(kF7, {1, 0, 0, 0}), random));
}

TEST_CASE("all applicable oracles agree on sampled vectors") {
  Rng rng(12);
  for (const Field& k : {kQ, kF7}) {
    for (const char* desc : kForms) {
      const InvariantForm f = InvariantForm::parse(desc, k);
      for (int t = 0; t < 10; ++t) {
        const RepVector m = sample_minimal(f, rng);
        const RepVector g = random_vector(f.space(), k, 4, rng);
        const bool g_min = minimal_by_rank(f, g).is_minimal;
        CHECK(minimal_by_rank(f, m).is_minimal);
        for (Oracle o : {Oracle::Rrs, Oracle::Radical}) {
          if (!oracle_applies(o, f)) continue;
          if (o == Oracle::Rrs && f.space().coord_count() > 10) continue;
          const std::string form_name = desc;
        CAPTURE(form_name);
          CAPTURE(oracle_name(o));
          CHECK(minimal_by(o, f, m).is_minimal);
          CHECK(minimal_by(o, f, g).is_minimal == g_min);
        }
      }
    }
  }
}
