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

#include "preserver/multilinear.hpp"
#include "preserver/preservers.hpp"
#include "preserver/verify.hpp"

using namespace preserver;

namespace {

const Field kQ = Field::rationals();
const Field kF7 = Field::prime(7);

const char* const kForms[] = {"symm-det:3", "skew-pf:4", "skew-pf:6", "square-det:3", "cubic-disc",
                              "wedge36",    "sp6",       "mat2n:4",   "mat2n:5",      "hyperdet"};

}  // namespace

TEST_CASE("congruence scales the determinant by r^n det(P)^2") {
  const InvariantForm f = InvariantForm::symm_det(3, kQ);
  const Matrix p = Matrix::from_ints(kQ, {{1, 1, 0}, {0, 2, 0}, {0, 0, 1}});
  const PreserverElement t(f.space(), kQ, Congruence{kQ.from_int(3), p});
  CHECK(scaling_factor(t, f) == kQ.from_int(27 * 4));
  const Verdict v = scales_form(t, f, TestPolicy::symbolic());
  CHECK(v.passed);
  CHECK(*v.scalar == kQ.from_int(108));
  CHECK_FALSE(constraint_satisfied(t, f));
  CHECK_FALSE(preserves_form(t, f, TestPolicy::symbolic()).passed);
}

TEST_CASE("cubic composition character c^4 det(g)^6") {
  const InvariantForm f = InvariantForm::cubic_disc(kQ);
  const Matrix g = Matrix::from_ints(kQ, {{1, 1}, {0, 2}});
  const PreserverElement t(f.space(), kQ, CubicComposition{kQ.from_int(-1), g});
  CHECK(scaling_factor(t, f) == kQ.from_int(64));
}

TEST_CASE("the Alt(4) star preserves the Pfaffian symbolically") {
  for (const Field& k : {kQ, kF7}) CHECK(star_identity_suite(k).passed());
}

TEST_CASE("hyperdet is invariant under factor permutations") {
  for (const Field& k : {kQ, kF7}) {
    const SuiteResult r = hyperdet_permutation_suite(k);
    CHECK(r.trials == 6);
    CHECK(r.passed());
  }
}

TEST_CASE("schwartz-zippel point count meets 2^-60") {
  for (const char* desc : kForms) {
    for (const Field& k : {kQ, kF7}) {
      const InvariantForm f = InvariantForm::parse(desc, k);
      const std::size_t pts = schwartz_zippel_trials(f);
      const mpq_class set = k.is_rational() ? mpq_class(mpz_class(1) << 32) : mpq_class(k.modulus());
      mpq_class bound = 1;
      for (std::size_t i = 0; i < pts; ++i) bound *= mpq_class(f.degree()) / set;
      CHECK(bound <= mpq_class(1, mpz_class(1) << 60));
    }
  }
}

TEST_CASE("families: forward, character, violation") {
  Rng rng(21);
  for (const Field& k : {kQ, kF7}) {
    for (const char* desc : kForms) {
      const InvariantForm f = InvariantForm::parse(desc, k);
      for (Family fam : families_for(f)) {
        const std::string form_name = desc;
        CAPTURE(form_name);
        CAPTURE(family_name(fam));
        for (int t = 0; t < 3; ++t) {
          const PreserverElement good = sample_group_element(fam, f, SampleMode::Satisfying, rng);
          CHECK(constraint_satisfied(good, f));
          CHECK(preserves_form(good, f, TestPolicy::automatic(f, 1)).passed);
          const PreserverElement any = sample_group_element(fam, f, SampleMode::Unconstrained, rng);
          const Verdict v = scales_form(any, f, TestPolicy::automatic(f, 2));
          REQUIRE(v.passed);
          CHECK(*v.scalar == scaling_factor(any, f));
          const PreserverElement bad = sample_group_element(fam, f, SampleMode::Violating, rng);
          CHECK_FALSE(constraint_satisfied(bad, f));
          CHECK_FALSE(preserves_form(bad, f, TestPolicy::random_points(32, 3)).passed);
          CHECK(preserves_minimals(any, f, 2, 4).passed);
        }
      }
    }
  }
}

TEST_CASE("group laws") {
  Rng rng(22);
  for (const Field& k : {kQ, kF7}) {
    for (const char* desc : kForms) {
      const InvariantForm f = InvariantForm::parse(desc, k);
      for (Family fam : families_for(f)) {
        const std::string form_name = desc;
        CAPTURE(form_name);
        CAPTURE(family_name(fam));
        const PreserverElement a = sample_group_element(fam, f, SampleMode::Satisfying, rng);
        const PreserverElement b = sample_group_element(fam, f, SampleMode::Satisfying, rng);
        const PreserverElement ab = compose(a, b);
        CHECK(ab.coordinate_matrix() == a.coordinate_matrix() * b.coordinate_matrix());
        CHECK(constraint_satisfied(ab, f));
        const PreserverElement ai = inverse(a);
        CHECK(compose(a, ai).coordinate_matrix() == Matrix::identity(f.space().coord_count(), k));
        CHECK(constraint_satisfied(ai, f));
        const PreserverElement u = sample_group_element(fam, f, SampleMode::Unconstrained, rng);
        CHECK(scaling_factor(compose(u, a), f) == scaling_factor(u, f) * scaling_factor(a, f));
      }
    }
  }
}

TEST_CASE("policy selection") {
  const InvariantForm small = InvariantForm::cubic_disc(kQ);
  const InvariantForm big = InvariantForm::wedge36(kQ);
  CHECK(policy_for(small, PolicyChoice::Automatic, 0).kind == TestPolicy::Kind::Symbolic);
  CHECK(policy_for(big, PolicyChoice::Automatic, 0).kind == TestPolicy::Kind::SchwartzZippel);
  CHECK_THROWS_AS(policy_for(big, PolicyChoice::Symbolic, 0), std::invalid_argument);
  CHECK(policy_for(small, PolicyChoice::Randomized, 0).kind == TestPolicy::Kind::SchwartzZippel);
}

TEST_CASE("corollary ids") {
  CHECK(corollary_ids().size() == 9);
  CHECK(corollary_forms("square.f").size() == 3);
  CHECK_THROWS_AS(corollary_forms("e6"), OutOfScope);
  CHECK_THROWS_AS(corollary_forms("nope"), std::invalid_argument);
  VerifyConfig cfg;
  cfg.field = kF7;
  cfg.trials = 5;
  CHECK(verify_corollary("cubics", cfg).passed());
}

TEST_CASE("serial and parallel suites agree") {
  VerifyConfig cfg;
  cfg.field = kF7;
  cfg.trials = 8;
  cfg.seed = 5;
  const InvariantForm f = InvariantForm::symm_det(3, kF7);
  cfg.exec = Execution::Serial;
  const SuiteResult a = character_suite(f, Family::Congruence, cfg);
  cfg.exec = Execution::Parallel;
  const SuiteResult b = character_suite(f, Family::Congruence, cfg);
  CHECK(a.failures == b.failures);
  CHECK(a.error_bound == b.error_bound);
}
