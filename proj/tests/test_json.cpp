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

#include "preserver/json_io.hpp"

using namespace preserver;

TEST_CASE("vector round trip") {
  const Field q = Field::rationals();
  Rng rng(1);
  for (const Space& s : {Space::symm(3), Space::alt(4), Space::rect(2, 5), Space::wedge(3, 6), Space::cubic(),
                         Space::tritensor(), Space::wedge3_sp()}) {
    const RepVector v = random_vector(s, q, 5, rng);
    const Json j = to_json(v);
    CHECK(repvector_from_json(Json::parse(j.dump()), q) == v);
  }
}

TEST_CASE("vector encoding") {
  const Field q = Field::rationals();
  const RepVector v(Space::cubic(), {parse_element(q, "1/2"), q.zero(), q.from_int(-3), q.one()});
  CHECK(to_json(v).dump() == R"({"space":"cubic","params":{},"entries":["1/2","0","-3","1"]})");
  const Json w = Json::parse(R"({"space":"wedge","params":{"d":2,"n":4},"entries":[1,0,0,0,0,"2/3"]})");
  CHECK(repvector_from_json(w, q).space == Space::wedge(2, 4));
}

TEST_CASE("malformed input") {
  const Field q = Field::rationals();
  CHECK_THROWS(repvector_from_json(Json::parse(R"({"space":"cubic","entries":["1"]})"), q));
  CHECK_THROWS(repvector_from_json(Json::parse(R"({"space":"e6","entries":[]})"), q));
  CHECK_THROWS(repvector_from_json(Json::parse(R"({"space":"symm","params":{},"entries":[]})"), q));
  CHECK_THROWS(repvector_from_json(Json::parse(R"({"space":"cubic","entries":[1,2,3,true]})"), q));
}

TEST_CASE("census report has no timing") {
  CensusReport r;
  r.case_id = "x";
  r.elapsed_seconds = 1.5;
  CHECK_FALSE(to_json(r).contains("elapsed_seconds"));
}

TEST_CASE("verdict carries the error bound and counterexample") {
  const Field k = Field::prime(7);
  const InvariantForm f = InvariantForm::hyperdet(k);
  const Matrix two = Matrix::identity(2, k) * k.from_int(2);
  const PreserverElement t(f.space(), k, TriplePush{two, Matrix::identity(2, k), Matrix::identity(2, k)});
  const Verdict bad = preserves_form(t, f, TestPolicy::random_points(32, 1));
  const Json j = to_json(bad);
  CHECK(j["passed"] == false);
  CHECK(j["counterexample"]["input"]["space"] == "tritensor");
  const Verdict good = preserves_form(PreserverElement(f.space(), k, FactorPermutation{{1, 2, 0}}), f,
                                      TestPolicy::random_points(40, 1));
  CHECK(to_json(good).contains("error_bound"));
  CHECK(to_json(t)["family"] == t.family());
}
