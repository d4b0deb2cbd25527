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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "preserver/matrix.hpp"
#include "preserver/polynomial.hpp"
#include "preserver/space.hpp"

namespace preserver {

enum class FormLine { SymmDet, SkewPf, SquareDet, Quadric, CubicDisc, Wedge36, Sp6, Mat2n, Hyperdet };

/**
 * An invariant polynomial on one representation space.
 *
 * Conventions: Pf(J) = +1 with first-row expansion; the discriminant is
 * a1^2 a2^2 + 18 a0 a1 a2 a3 - 4 a0 a2^3 - 4 a1^3 a3 - 27 a0^2 a3^2; the wedge^3 k^6
 * quartic is normalized so f(e1^e3^e4 + e2^e5^e6) = 1; the hyperdeterminant
 * takes value 1 at e1(x)e1(x)e1 + e2(x)e2(x)e2.
 */
class InvariantForm {
 public:
  static InvariantForm symm_det(std::size_t n, const Field& f);
  static InvariantForm skew_pf(std::size_t n, const Field& f);
  static InvariantForm square_det(std::size_t n, const Field& f);
  /// v^t S v; S symmetric invertible.
  static InvariantForm quadric(const Matrix& s);
  static InvariantForm cubic_disc(const Field& f);
  static InvariantForm wedge36(const Field& f);
  /// Restriction to wedge^3_0 k^6 for the standard symplectic form.
  static InvariantForm sp6(const Field& f);
  /// det(X S X^t) on 2 x n matrices; S symmetric invertible, n >= 4.
  static InvariantForm mat2n(const Matrix& s);
  static InvariantForm hyperdet(const Field& f);

  /// Parses "symm-det:n", "skew-pf:n", "square-det:n", "quadric:n", "cubic-disc",
  /// "wedge36", "sp6", "mat2n:n", "hyperdet". Quadric and mat2n use the split
  /// form S = antidiagonal ones.
  static InvariantForm parse(std::string_view descriptor, const Field& f);

  FormLine line() const { return line_; }
  std::size_t n() const { return n_; }
  const Field& field() const { return field_; }
  const Space& space() const { return space_; }
  /// Gram matrix S (quadric, mat2n) or the symplectic form b (sp6).
  const Matrix& gram() const { return s_; }
  int degree() const;
  /// Row of the classification table this form belongs to.
  int table_line() const;
  std::string descriptor() const;

  FieldElement eval(const RepVector& v) const;
  /// Evaluation on raw coordinates over any ring (FieldElement or Polynomial).
  template <class R>
  R eval_coords(std::span<const R> c) const;

 private:
  InvariantForm(FormLine line, std::size_t n, Field f, Space s, Matrix gram);
  FormLine line_;
  std::size_t n_;
  Field field_;
  Space space_;
  Matrix s_;
};

/// Split symmetric form: ones on the antidiagonal.
Matrix split_form(std::size_t n, const Field& f);

template <class R>
R det_generic(std::span<const R> a, std::size_t n);
template <class R>
R pfaffian_generic(std::span<const R> a, std::size_t n);

FieldElement pfaffian(const RepVector& v);
/// Pfaffian of the alternating matrix m (n even).
FieldElement pfaffian(const Matrix& m);
FieldElement quartic_wedge36(const RepVector& v);
FieldElement quartic_sp6(const RepVector& v, const Matrix& b);
FieldElement hyperdet(const RepVector& v);
FieldElement cubic_discriminant(const RepVector& v);

/// The normalizing constant of the wedge^3 k^6 quartic relative to trace(K_v^2),
/// calibrated once against the w-image formula.
const FieldElement& wedge36_constant(const Field& f);

/// w(a(x)x + b(x)y) = e1 ^ x + e2 ^ y with x, y in wedge^2 of span(e3..e6).
RepVector w_embed(const RepVector& x, const RepVector& y);

}  // namespace preserver
