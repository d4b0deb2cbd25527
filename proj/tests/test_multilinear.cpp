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
#include "preserver/wedge.hpp"

using namespace preserver;

namespace {

const Field kQ = Field::rationals();
const Field kF7 = Field::prime(7);

}  // namespace

TEST_CASE("colex subset ranks") {
  const auto subs = wedge::subsets(3, 6);
  REQUIRE(subs.size() == 20);
  for (std::size_t i = 0; i < subs.size(); ++i) CHECK(wedge::subset_rank(subs[i]) == i);
  CHECK(subs[0] == std::vector<std::size_t>{0, 1, 2});
  CHECK(subs[1] == std::vector<std::size_t>{0, 1, 3});
  CHECK(subs[2] == std::vector<std::size_t>{0, 2, 3});
  CHECK(subs[3] == std::vector<std::size_t>{1, 2, 3});
  std::vector<std::size_t> idx{2, 0, 1};
  CHECK(wedge::sort_sign(idx) == 1);
  idx = {1, 0, 2};
  CHECK(wedge::sort_sign(idx) == -1);
  idx = {1, 1, 2};
  CHECK(wedge::sort_sign(idx) == 0);
}

TEST_CASE("Hodge star on wedge^3 k^6 squares to -1") {
  const Matrix s = wedge::hodge_star(3, 6, kQ);
  CHECK(s * s == Matrix::identity(20, kQ) * kQ.from_int(-1));
}

TEST_CASE("exterior power is multiplicative") {
  Rng rng(2);
  const Matrix a = random_invertible(4, kQ, 3, rng);
  const Matrix b = random_invertible(4, kQ, 3, rng);
  CHECK(wedge::exterior_power(a * b, 2) == wedge::exterior_power(a, 2) * wedge::exterior_power(b, 2));
}

TEST_CASE("rank plus radical dimension") {
  Rng rng(4);
  for (const Field& f : {kQ, kF7}) {
    for (int t = 0; t < 30; ++t) {
      const RepVector v = random_vector(Space::symm(5), f, 2, rng);
      const BilinearGram b(to_matrix(v), Symmetry::Symmetric);
      CHECK(rank(b) + radical_dimension(b) == 5);
      const RepVector w = random_vector(Space::alt(6), f, 2, rng);
      const BilinearGram c(to_matrix(w), Symmetry::Skew);
      CHECK(rank(c) + radical_dimension(c) == 6);
      CHECK(rank(c) % 2 == 0);
    }
  }
  CHECK_THROWS(BilinearGram(Matrix::from_ints(kQ, {{0, 1}, {0, 0}}), Symmetry::Skew));
}

TEST_CASE("polarize4 restricts to the quartic on the diagonal") {
  Rng rng(6);
  for (const Field& k : {kQ, kF7}) {
    for (const auto& f : {InvariantForm::wedge36(k), InvariantForm::hyperdet(k), InvariantForm::sp6(k),
                          InvariantForm::parse("mat2n:4", k)}) {
      for (int t = 0; t < 25; ++t) {
        const RepVector v = random_vector(f.space(), k, 3, rng);
        CHECK(polarize4(f, v, v, v, v) == f.eval(v));
      }
    }
  }
  const InvariantForm cubic = InvariantForm::symm_det(3, kQ);
  const RepVector z = RepVector::zero(cubic.space(), kQ);
  CHECK_THROWS(polarize4(cubic, z, z, z, z));
}

TEST_CASE("polarize4 is symmetric") {
  Rng rng(8);
  const InvariantForm f = InvariantForm::hyperdet(kQ);
  std::vector<RepVector> x;
  for (int i = 0; i < 4; ++i) x.push_back(random_vector(f.space(), kQ, 3, rng));
  const FieldElement base = polarize4(f, x[0], x[1], x[2], x[3]);
  CHECK(polarize4(f, x[1], x[0], x[3], x[2]) == base);
  CHECK(polarize4(f, x[3], x[2], x[1], x[0]) == base);
}

TEST_CASE("registered pairings are nondegenerate") {
  const Matrix split = Matrix::from_ints(kQ, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  for (const Space& s : {Space::cubic(), Space::wedge(3, 6), Space::tritensor(), Space::rect(2, 4)}) {
    const SymplecticPairing p = symplectic_pairing(s, kQ, &split);
    CHECK(rank(p.gram) == s.coord_count());
    CHECK(p.gram.is_alternating());
  }
}

TEST_CASE("trilinear_t solves the polarization") {
  Rng rng(9);
  const InvariantForm f = InvariantForm::hyperdet(kQ);
  REQUIRE(registered_pairing(f).has_value());
  std::vector<RepVector> x;
  for (int i = 0; i < 4; ++i) x.push_back(random_vector(f.space(), kQ, 3, rng));
  const RepVector t = trilinear_t(f, x[0], x[1], x[2]);
  CHECK(symplectic_pair(f.space(), t, x[3]) == polarize4(f, x[0], x[1], x[2], x[3]));
}

TEST_CASE("annihilator dimension detects decomposable vectors") {
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::vector<FieldElement>> vs;
    for (int i = 0; i < 3; ++i) {
      std::vector<FieldElement> u;
      for (int j = 0; j < 6; ++j) u.push_back(field_sample_int(kQ, -3, 3, rng));
      vs.push_back(u);
    }
    const RepVector v(Space::wedge(3, 6), wedge::decomposable(vs));
    if (v.is_zero()) continue;
    CHECK(wedge_annihilator_dim(v) == 3);
  }
  RepVector g = RepVector::zero(Space::wedge(3, 6), kQ);
  g.coords[0] = kQ.one();
  g.coords[19] = kQ.one();
  CHECK(wedge_annihilator_dim(g) == 0);
}

TEST_CASE("contraction of e1 e2 e3") {
  const Matrix b = standard_symplectic(6, kQ);
  RepVector v = RepVector::zero(Space::wedge(3, 6), kQ);
  std::vector<std::size_t> i{0, 1, 2};
  v.coords[wedge::subset_rank(i)] = kQ.one();
  const RepVector c = sp6_contract(v, b);
  // b12 e3 - b13 e2 + b23 e1 = e3
  CHECK(c.coords[2].is_one());
  CHECK(c.coords[0].is_zero());
  CHECK(c.coords[1].is_zero());
}
