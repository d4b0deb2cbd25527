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
#include <span>
#include <string>
#include <vector>

#include "preserver/field.hpp"
#include "preserver/matrix.hpp"
#include "preserver/polynomial.hpp"

namespace preserver {

enum class SpaceKind {
  Symm,       // symmetric n x n
  Alt,        // alternating n x n, zero diagonal
  Square,     // n x n
  Rect,       // m x n (2 x n is k^2 (x) k^n)
  Vector,     // k^n
  Wedge,      // wedge^d k^n
  Wedge3Sp,   // kernel of the symplectic contraction wedge^3 k^6 -> k^6
  Cubic,      // binary cubic forms a0 x^3 + a1 x^2 y + a2 x y^2 + a3 y^3
  TriTensor,  // k^2 (x) k^2 (x) k^2
};

/**
 * A representation space. Vectors are stored by coordinates:
 *  - Symm: upper triangle including the diagonal, row-major;
 *  - Alt: strict upper triangle, row-major (x1..x6 = x12,x13,x14,x23,x24,x34 for n = 4);
 *  - Square/Rect: all entries, row-major;
 *  - Wedge/Wedge3Sp: colexicographically sorted index subsets;
 *  - Cubic: (a0, a1, a2, a3);
 *  - TriTensor: a_ijk at index 4i + 2j + k.
 * Wedge3Sp keeps all 20 coordinates of wedge^3 k^6; its dimension is 14.
 */
struct Space {
  SpaceKind kind = SpaceKind::Vector;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t d = 0;

  static Space symm(std::size_t n);
  static Space alt(std::size_t n);
  static Space square(std::size_t n);
  static Space rect(std::size_t m, std::size_t n);
  static Space vector(std::size_t n);
  static Space wedge(std::size_t d, std::size_t n);
  static Space wedge3_sp();
  static Space cubic();
  static Space tritensor();

  /// Number of stored coordinates.
  std::size_t coord_count() const;
  /// Dimension as a vector space.
  std::size_t dim() const;
  bool is_matrix() const;
  std::size_t matrix_rows() const;
  std::size_t matrix_cols() const;

  /// JSON/CLI tag: symm, alt, square, rect, vector, wedge, wedge3-0, cubic, tritensor.
  std::string tag() const;
  std::string describe() const;

  friend bool operator==(const Space&, const Space&) = default;
};

struct RepVector {
  Space space;
  std::vector<FieldElement> coords;

  RepVector() = default;
  RepVector(Space s, std::vector<FieldElement> c);

  static RepVector zero(const Space& s, const Field& f);
  static RepVector unit(const Space& s, const Field& f, std::size_t index);

  Field field() const;
  bool is_zero() const;

  RepVector& operator+=(const RepVector& o);
  RepVector& operator-=(const RepVector& o);
  RepVector& operator*=(const FieldElement& c);
  friend RepVector operator+(RepVector a, const RepVector& b) { return a += b; }
  friend RepVector operator-(RepVector a, const RepVector& b) { return a -= b; }
  friend RepVector operator*(const FieldElement& c, RepVector a) { return a *= c; }
  friend bool operator==(const RepVector& a, const RepVector& b) = default;
};

/// Full matrix of a matrix-kind vector.
Matrix to_matrix(const RepVector& v);
/// Inverse of to_matrix; validates symmetry/alternation for Symm/Alt.
RepVector from_matrix(const Space& s, const Matrix& m);

/// Full row-major entries for a matrix-kind space over any ring.
template <class R>
std::vector<R> full_matrix_entries(const Space& s, std::span<const R> c) {
  const std::size_t r = s.matrix_rows();
  const std::size_t k = s.matrix_cols();
  std::vector<R> out(r * k, zero_like(c[0]));
  switch (s.kind) {
    case SpaceKind::Symm: {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
          out[i * r + j] = c[idx];
          out[j * r + i] = c[idx];
          ++idx;
        }
      break;
    }
    case SpaceKind::Alt: {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
          out[i * r + j] = c[idx];
          out[j * r + i] = -c[idx];
          ++idx;
        }
      break;
    }
    default:
      for (std::size_t i = 0; i < r * k; ++i) out[i] = c[i];
  }
  return out;
}

/// Basis of the space in stored coordinates (unit vectors except Wedge3Sp).
std::vector<RepVector> space_basis(const Space& s, const Field& f);

/// Random vector: random combination of the basis with coefficients from
/// field_sample_int(-height, height).
RepVector random_vector(const Space& s, const Field& f, std::int64_t height, Rng& rng);

/// Standard symplectic form on k^6 pairing e1<->e2, e3<->e4, e5<->e6.
Matrix standard_symplectic(std::size_t n, const Field& f);

}  // namespace preserver
