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

#include "preserver/matrix.hpp"
#include "preserver/polynomial.hpp"

using namespace preserver;

TEST_CASE("field descriptors") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("Fp:7").modulus() == 7);
  CHECK(Field::parse("Fp:7").descriptor() == "Fp:7");
  CHECK_THROWS_AS(Field::parse("Fp:9"), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("Fp:3"), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("R"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  const Field q = Field::rationals();
  const FieldElement a = parse_element(q, "2/6");
  CHECK(a.to_string() == "1/3");
  CHECK((a + a + a).is_one());
  CHECK((a * a.inverse()).is_one());
  CHECK(parse_element(q, "-4").to_string() == "-4");
  CHECK(a.pow(-2).to_string() == "9");
  CHECK_THROWS(q.zero().inverse());
}

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(7);
  const FieldElement three = f.from_int(3);
  CHECK((three * three.inverse()).is_one());
  CHECK(f.from_int(-1).residue() == 6);
  CHECK(parse_element(f, "1/2").residue() == 4);
  CHECK(three.pow(6).is_one());
  CHECK_THROWS(three + Field::prime(11).one());
  CHECK_THROWS(three + Field::rationals().one());
}

TEST_CASE("nth roots") {
  const Field f = Field::prime(7);
  for (int a = 1; a < 7; ++a) {
    auto r = nth_root(f.from_int(a), 3);
    if (r) CHECK(r->pow(3) == f.from_int(a));
  }
  CHECK(nth_root(f.from_int(2), 3).has_value() == false);
  const Field q = Field::rationals();
  CHECK(*nth_root(parse_element(q, "8/27"), 3) == parse_element(q, "2/3"));
  CHECK_FALSE(nth_root(q.from_int(2), 2).has_value());
}

TEST_CASE("sampling respects height") {
  Rng rng(1);
  const Field q = Field::rationals();
  for (int i = 0; i < 200; ++i) {
    const FieldElement x = field_sample(q, 3, rng);
    CHECK(abs(x.rational().get_num()) <= 3);
    CHECK(x.rational().get_den() <= 3);
    const FieldElement y = field_sample_int(q, -2, 2, rng);
    CHECK(abs(y.rational()) <= 2);
  }
  CHECK_THROWS(field_sample(q, 0, rng));
}

TEST_CASE("matrix rank and determinant") {
  const Field q = Field::rationals();
  const Matrix m = Matrix::from_ints(q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  CHECK(determinant(m) == q.from_int(-3));
  CHECK(rank(m) == 3);
  CHECK(*inverse(m) * m == Matrix::identity(3, q));
  const Matrix s = Matrix::from_ints(q, {{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
  CHECK(rank(s) == 2);
  CHECK_FALSE(inverse(s).has_value());
  const Matrix k = kernel_basis(s);
  CHECK(k.cols() == 1);
  CHECK((s * k).is_zero());
}

TEST_CASE("rank is invariant under row and column operations") {
  Rng rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    for (int t = 0; t < 20; ++t) {
      Matrix x(4, 4, f);
      for (std::size_t i = 0; i < 4; ++i) x(i % 2, i) = f.from_int(static_cast<std::int64_t>(i) + 1);
      const Matrix p = random_invertible(4, f, 5, rng);
      const Matrix r = random_invertible(4, f, 5, rng);
      CHECK(rank(p * x * r) == rank(x));
    }
  }
}

TEST_CASE("polynomials") {
  const Field q = Field::rationals();
  const Polynomial x = Polynomial::variable(q, 2, 0);
  const Polynomial y = Polynomial::variable(q, 2, 1);
  const Polynomial p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.total_degree() == 2);
  const std::vector<FieldElement> pt{q.from_int(3), q.from_int(2)};
  CHECK(p.evaluate(pt) == q.from_int(5));
  CHECK((p - p).is_zero());
}
