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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "preserver/forms.hpp"
#include "preserver/minimality.hpp"

namespace preserver {

/// X -> r P X P^t, or r P X* P^t when `hodge` is set (alternating 4 x 4 only).
struct Congruence {
  FieldElement r;
  Matrix p;
  bool hodge = false;
};
/// X -> A X B.
struct Sandwich {
  Matrix a, b;
};
/// X -> A X^t B.
struct TransposeSandwich {
  Matrix a, b;
};
/// The star on alternating 4 x 4 matrices: (x1..x6) -> (x1, -x2, -x4, -x3, -x5, x6).
struct HodgeStar4 {};
/// *e_I = sgn(I, I^c) e_{I^c} on wedge^3 k^6.
struct HodgeStar20 {};
/// q -> c (q o g).
struct CubicComposition {
  FieldElement c;
  Matrix g;
};
/// v1^..^vd -> c g v1 ^ .. ^ g vd, after the star when `hodge` is set (n = 2d).
struct WedgePush {
  FieldElement c;
  Matrix g;
  bool hodge = false;
};
/// v -> c wedge^3 g (v) on wedge^3_0 k^6 with g^t b g = mu b.
struct GSp6Elem {
  FieldElement c;
  Matrix g;
  FieldElement mu;
};
/// Factor i moves to position sigma[i]: e_{b0} (x) e_{b1} (x) e_{b2} -> w with w_{sigma[i]} = b_i.
using Perm3 = std::array<int, 3>;
/// (g1 (x) g2 (x) g3) after the factor permutation sigma.
struct TriplePush {
  Matrix g1, g2, g3;
  Perm3 sigma{0, 1, 2};
};
struct FactorPermutation {
  Perm3 sigma{0, 1, 2};
};
/// X -> g1 X g2^t on 2 x n matrices, g2^t S g2 = mu S.
struct GOPair {
  Matrix g1, g2;
  FieldElement mu;
  Matrix s;
};
/// Arbitrary invertible map, stored as its matrix on coordinates.
struct GenericMap {
  Matrix m;
};

using FamilyData = std::variant<Congruence, Sandwich, TransposeSandwich, HodgeStar4, HodgeStar20, CubicComposition,
                                WedgePush, GSp6Elem, TriplePush, FactorPermutation, GOPair, GenericMap>;

class PreserverElement {
 public:
  /// Validates shapes and invertibility.
  PreserverElement(Space space, const Field& field, FamilyData data);

  const Space& space() const { return space_; }
  const FamilyData& data() const { return data_; }
  const Field& field() const { return coords_.field(); }
  std::string family() const;

  /// Matrix of the map on stored coordinates.
  const Matrix& coordinate_matrix() const { return coords_; }

 private:
  Space space_;
  FamilyData data_;
  Matrix coords_;
};

RepVector apply(const PreserverElement& t, const RepVector& v);

/// t1 o t2 (t2 first). Stays in the parametric family where one exists.
PreserverElement compose(const PreserverElement& t1, const PreserverElement& t2);
PreserverElement inverse(const PreserverElement& t);

/// The scalar chi with f(T v) = chi f(v). Throws for families not attached to f.
FieldElement scaling_factor(const PreserverElement& t, const InvariantForm& f);
bool constraint_satisfied(const PreserverElement& t, const InvariantForm& f);

struct TestPolicy {
  enum class Kind { Symbolic, SchwartzZippel };
  Kind kind = Kind::SchwartzZippel;
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  /// Symbolic when the space has at most 10 coordinates, otherwise enough
  /// random points for a compound error bound of at most 2^-60.
  static TestPolicy automatic(const InvariantForm& f, std::uint64_t seed);
  static TestPolicy symbolic() { return {Kind::Symbolic, 0, 0}; }
  static TestPolicy random_points(std::size_t trials, std::uint64_t seed) {
    return {Kind::SchwartzZippel, trials, seed};
  }
  std::string name() const { return kind == Kind::Symbolic ? "symbolic" : "schwartz-zippel"; }
};

/// Points per identity test so that (deg / |S|)^k <= 2^-60.
std::size_t schwartz_zippel_trials(const InvariantForm& f);
/// Random point with basis coefficients from [-2^31, 2^31) (Q) or all of F_p.
RepVector schwartz_zippel_point(const Space& s, const Field& k, Rng& rng);

struct Counterexample {
  RepVector input;
  FieldElement lhs;
  FieldElement rhs;
  /// Second point for scale tests (inconsistent ratios).
  std::optional<RepVector> second;
};

struct Verdict {
  bool passed = false;
  std::string policy;
  std::optional<Counterexample> counterexample;
  std::optional<FieldElement> scalar;
  /// Compound failure probability of randomized tests (exact rational).
  std::optional<mpq_class> error_bound;
  std::size_t points = 0;
};

/// f o T = f.
Verdict preserves_form(const PreserverElement& t, const InvariantForm& f, const TestPolicy& policy);
/// f o T = c f for some scalar c, reported in `scalar`.
Verdict scales_form(const PreserverElement& t, const InvariantForm& f, const TestPolicy& policy);
/// T maps `trials` sampled minimal elements to minimal elements (rank oracle).
Verdict preserves_minimals(const PreserverElement& t, const InvariantForm& f, std::size_t trials, std::uint64_t seed);

enum class Family {
  Congruence,
  CongruenceStar,
  Sandwich,
  TransposeSandwich,
  CubicComposition,
  WedgePush,
  WedgePushStar,
  GSp6,
  TriplePush,
  GOPair
};
enum class SampleMode { Satisfying, Unconstrained, Violating };

std::string family_name(Family f);
/// Parametric families attached to a form (empty for the quadric line).
std::vector<Family> families_for(const InvariantForm& f);

/**
 * Random family element. Satisfying elements have chi = 1: over Q the matrix
 * part is s U D (U unimodular, D = diag(+-1)) and the scalar part is solved in
 * closed form; over F_p the power equation is solved with nth_root, resampling
 * on failure. Violating elements are rejection-sampled with chi != 1.
 */
PreserverElement sample_group_element(Family fam, const InvariantForm& f, SampleMode mode, Rng& rng);

}  // namespace preserver
