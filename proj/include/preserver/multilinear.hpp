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

#include <cstddef>
#include <optional>

#include "preserver/forms.hpp"
#include "preserver/matrix.hpp"
#include "preserver/space.hpp"

namespace preserver {

enum class Symmetry { Symmetric, Skew };

struct BilinearGram {
  Matrix gram;
  Symmetry symmetry;

  /// Throws if the matrix does not match its tag.
  BilinearGram(Matrix g, Symmetry s);
};

/// Rank of a matrix-kind vector; other spaces are rejected.
std::size_t rank(const RepVector& v);
std::size_t rank(const BilinearGram& b);
std::size_t radical_dimension(const BilinearGram& b);

/// Symmetric 4-linear form with f(v, v, v, v) = f(v), by inclusion-exclusion over
/// the 15 nonempty partial sums, scaled by 1/24.
FieldElement polarize4(const InvariantForm& f, const RepVector& x1, const RepVector& x2, const RepVector& x3,
                       const RepVector& x4);

/**
 * Gram matrix of (u, w) -> f(x, x, u, w) in the basis returned by space_basis
 * (the coordinate basis everywhere except wedge^3_0, where it has size 14).
 */
BilinearGram bilinear_bx(const InvariantForm& f, const RepVector& x);

/// Nondegenerate skew form on a representation space, as a Gram matrix on the
/// stored coordinates.
struct SymplecticPairing {
  Space space;
  Matrix gram;
};

/**
 * The invariant skew pairing on binary cubics, wedge^3 k^6 (and wedge^3_0),
 * k^2 (x) k^n (needs S) and k^2 (x) k^2 (x) k^2. Cubics use
 * a0 b3 - a1 b2 / 3 + a2 b1 / 3 - a3 b0; wedge^3 k^6 uses x ^ y = c e1^...^e6;
 * tensor spaces use the standard form [[0,1],[-1,0]] on each k^2 factor.
 */
SymplecticPairing symplectic_pairing(const Space& s, const Field& f, const Matrix* S = nullptr);

/// The pairing registered for a quartic form's space, if any.
std::optional<SymplecticPairing> registered_pairing(const InvariantForm& f);

/// <x, y>; on alternating 4 x 4 matrices this is the coefficient of t in
/// Pf(x + t y), a symmetric form.
FieldElement symplectic_pair(const Space& s, const RepVector& x, const RepVector& y, const Matrix* S = nullptr);

/// The vector t with <t, x4> = f(x1, x2, x3, x4) for all x4.
RepVector trilinear_t(const InvariantForm& f, const RepVector& x1, const RepVector& x2, const RepVector& x3);

/// dim {u in k^n : u ^ v = 0}.
std::size_t wedge_annihilator_dim(const RepVector& v);

/// Contraction of v in wedge^3 k^6 by a nondegenerate skew form b.
RepVector sp6_contract(const RepVector& v, const Matrix& b);

}  // namespace preserver
