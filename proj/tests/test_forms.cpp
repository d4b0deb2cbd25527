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

#include "preserver/forms.hpp"
#include "preserver/multilinear.hpp"
#include "preserver/wedge.hpp"

using namespace preserver;

namespace {

const Field kQ = Field::rationals();
const Field kF7 = Field::prime(7);

RepVector vec(const Space& s, const Field& f, std::initializer_list<std::int64_t> xs) {
  std::vector<FieldElement> c;
  for (auto x : xs) c.push_back(f.from_int(x));
  return RepVector(s, c);
}

}  // namespace

TEST_CASE("form descriptors") {
  for (const char* d : {"symm-det:3", "skew-pf:6", "square-det:2", "quadric:4", "cubic-disc", "wedge36", "sp6",
                        "mat2n:4", "hyperdet"}) {
    CHECK(InvariantForm::parse(d, kQ).descriptor() == d);
  }
  CHECK_THROWS_AS(InvariantForm::parse("skew-pf:3", kQ), std::invalid_argument);
  CHECK_THROWS_AS(InvariantForm::parse("e6", kQ), std::invalid_argument);
  CHECK(InvariantForm::parse("wedge36", kQ).degree() == 4);
  CHECK(InvariantForm::parse("cubic-disc", kQ).table_line() == 6);
  CHECK(InvariantForm::parse("quadric:4", kQ).table_line() == 5);
}

TEST_CASE("determinant and Pfaffian basics") {
  CHECK(InvariantForm::symm_det(2, kQ).eval(vec(Space::symm(2), kQ, {1, 0, 1})).is_one());
  const RepVector j4 = vec(Space::alt(4), kQ, {1, 0, 0, 0, 0, 1});
  CHECK(pfaffian(j4).is_one());
  // Pf = x1 x6 - x2 x5 + x3 x4
  CHECK(pfaffian(vec(Space::alt(4), kQ, {2, 3, 5, 7, 11, 13})) == kQ.from_int(2 * 13 - 3 * 11 + 5 * 7));
}

TEST_CASE("Pfaffian squared is the determinant") {
  Rng rng(11);
  for (std::size_t n : {4u, 6u, 8u}) {
    for (const Field& f : {kQ, kF7}) {
      for (int t = 0; t < 50; ++t) {
        const RepVector v = random_vector(Space::alt(n), f, 5, rng);
        const FieldElement pf = pfaffian(v);
        CHECK(pf * pf == determinant(to_matrix(v)));
      }
    }
  }
}

TEST_CASE("binary cubic discriminant") {
  const InvariantForm d = InvariantForm::cubic_disc(kQ);
  CHECK(d.eval(vec(Space::cubic(), kQ, {0, 1, -1, 0})).is_one());
  CHECK(d.eval(vec(Space::cubic(), kQ, {1, 0, 0, 0})).is_zero());
  CHECK(d.eval(vec(Space::cubic(), kQ, {0, 1, 0, 0})).is_zero());
  // x^3 + y^3: -27
  CHECK(d.eval(vec(Space::cubic(), kQ, {1, 0, 0, 1})) == kQ.from_int(-27));
}

TEST_CASE("wedge36 quartic normalization") {
  CHECK(wedge36_constant(kQ) == parse_element(kQ, "1/6"));
  const InvariantForm f = InvariantForm::wedge36(kQ);
  const Space s = Space::wedge(3, 6);
  RepVector v = RepVector::zero(s, kQ);
  std::vector<std::size_t> a{0, 2, 3}, b{1, 4, 5};
  v.coords[wedge::subset_rank(a)] = kQ.one();
  v.coords[wedge::subset_rank(b)] = kQ.one();
  CHECK(f.eval(v).is_one());
}

TEST_CASE("wedge36 on the image of w") {
  Rng rng(5);
  const Space a4 = Space::alt(4);
  for (const Field& k : {kQ, kF7}) {
    const InvariantForm f = InvariantForm::wedge36(k);
    for (int t = 0; t < 100; ++t) {
      const RepVector x = random_vector(a4, k, 6, rng);
      const RepVector y = random_vector(a4, k, 6, rng);
      const FieldElement xy = symplectic_pair(a4, x, y);
      CHECK(f.eval(w_embed(x, y)) == xy * xy - k.from_int(4) * pfaffian(x) * pfaffian(y));
    }
  }
}

TEST_CASE("hyperdeterminant") {
  const InvariantForm h = InvariantForm::hyperdet(kQ);
  RepVector e = RepVector::zero(Space::tritensor(), kQ);
  e.coords[0] = kQ.one();
  e.coords[7] = kQ.one();
  CHECK(h.eval(e).is_one());
}

TEST_CASE("hyperdeterminant against det(X S X^t)") {
  const Matrix s = Matrix::from_ints(kQ, {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
  const InvariantForm m = InvariantForm::mat2n(s);
  const InvariantForm h = InvariantForm::hyperdet(kQ);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const RepVector x = random_vector(Space::rect(2, 4), kQ, 9, rng);
    const RepVector tri(Space::tritensor(), x.coords);
    CHECK(m.eval(x) == -h.eval(tri));
  }
}

TEST_CASE("sp6 quartic rejects vectors outside the kernel of contraction") {
  RepVector v = RepVector::zero(Space::wedge(3, 6), kQ);
  std::vector<std::size_t> i{0, 1, 2};
  v.coords[wedge::subset_rank(i)] = kQ.one();
  CHECK_THROWS(quartic_sp6(v, standard_symplectic(6, kQ)));
}
