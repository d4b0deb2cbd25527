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

#include "preserver/space.hpp"

#include <stdexcept>

#include "preserver/wedge.hpp"

namespace preserver {

Space Space::symm(std::size_t n) { return {SpaceKind::Symm, n, n, 0}; }
Space Space::alt(std::size_t n) { return {SpaceKind::Alt, n, n, 0}; }
Space Space::square(std::size_t n) { return {SpaceKind::Square, n, n, 0}; }
Space Space::rect(std::size_t m, std::size_t n) { return {SpaceKind::Rect, m, n, 0}; }
Space Space::vector(std::size_t n) { return {SpaceKind::Vector, 1, n, 0}; }
Space Space::wedge(std::size_t d, std::size_t n) {
  if (d > n) throw std::invalid_argument("wedge degree exceeds ambient dimension");
  return {SpaceKind::Wedge, 0, n, d};
}
Space Space::wedge3_sp() { return {SpaceKind::Wedge3Sp, 0, 6, 3}; }
Space Space::cubic() { return {SpaceKind::Cubic, 0, 4, 0}; }
Space Space::tritensor() { return {SpaceKind::TriTensor, 0, 8, 0}; }

std::size_t Space::coord_count() const {
  switch (kind) {
    case SpaceKind::Symm: return n * (n + 1) / 2;
    case SpaceKind::Alt: return n * (n - 1) / 2;
    case SpaceKind::Square: return n * n;
    case SpaceKind::Rect: return m * n;
    case SpaceKind::Vector: return n;
    case SpaceKind::Wedge:
    case SpaceKind::Wedge3Sp: return wedge::binom(n, d);
    case SpaceKind::Cubic: return 4;
    case SpaceKind::TriTensor: return 8;
  }
  return 0;
}

std::size_t Space::dim() const { return kind == SpaceKind::Wedge3Sp ? 14 : coord_count(); }

bool Space::is_matrix() const {
  return kind == SpaceKind::Symm || kind == SpaceKind::Alt || kind == SpaceKind::Square ||
         kind == SpaceKind::Rect;
}

std::size_t Space::matrix_rows() const {
  if (!is_matrix()) throw std::invalid_argument("not a matrix space: " + describe());
  return kind == SpaceKind::Rect ? m : n;
}

std::size_t Space::matrix_cols() const {
  if (!is_matrix()) throw std::invalid_argument("not a matrix space: " + describe());
  return n;
}

std::string Space::tag() const {
  switch (kind) {
    case SpaceKind::Symm: return "symm";
    case SpaceKind::Alt: return "alt";
    case SpaceKind::Square: return "square";
    case SpaceKind::Rect: return "rect";
    case SpaceKind::Vector: return "vector";
    case SpaceKind::Wedge: return "wedge";
    case SpaceKind::Wedge3Sp: return "wedge3-0";
    case SpaceKind::Cubic: return "cubic";
    case SpaceKind::TriTensor: return "tritensor";
  }
  return "?";
}

std::string Space::describe() const {
  switch (kind) {
    case SpaceKind::Symm:
    case SpaceKind::Alt:
    case SpaceKind::Square:
    case SpaceKind::Vector: return tag() + "(" + std::to_string(n) + ")";
    case SpaceKind::Rect: return "rect(" + std::to_string(m) + "x" + std::to_string(n) + ")";
    case SpaceKind::Wedge: return "wedge(" + std::to_string(d) + "," + std::to_string(n) + ")";
    default: return tag();
  }
}

RepVector::RepVector(Space s, std::vector<FieldElement> c) : space(s), coords(std::move(c)) {
  if (coords.size() != space.coord_count()) {
    throw std::invalid_argument("coordinate count " + std::to_string(coords.size()) + " does not match " +
                                space.describe());
  }
}

RepVector RepVector::zero(const Space& s, const Field& f) {
  return RepVector(s, std::vector<FieldElement>(s.coord_count(), f.zero()));
}

RepVector RepVector::unit(const Space& s, const Field& f, std::size_t index) {
  RepVector v = zero(s, f);
  v.coords.at(index) = f.one();
  return v;
}

Field RepVector::field() const {
  if (coords.empty()) throw std::logic_error("empty vector has no field");
  return coords[0].field();
}

bool RepVector::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

RepVector& RepVector::operator+=(const RepVector& o) {
  if (!(space == o.space)) throw std::invalid_argument("space mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

RepVector& RepVector::operator-=(const RepVector& o) {
  if (!(space == o.space)) throw std::invalid_argument("space mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

RepVector& RepVector::operator*=(const FieldElement& c) {
  for (auto& x : coords) x *= c;
  return *this;
}

Matrix to_matrix(const RepVector& v) {
  const Space& s = v.space;
  Matrix m(s.matrix_rows(), s.matrix_cols(), v.field());
  auto entries = full_matrix_entries<FieldElement>(s, v.coords);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entries[i * m.cols() + j];
  return m;
}

RepVector from_matrix(const Space& s, const Matrix& m) {
  if (m.rows() != s.matrix_rows() || m.cols() != s.matrix_cols()) {
    throw std::invalid_argument("matrix shape does not match " + s.describe());
  }
  std::vector<FieldElement> c;
  c.reserve(s.coord_count());
  switch (s.kind) {
    case SpaceKind::Symm:
      if (!m.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
      for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = i; j < s.n; ++j) c.push_back(m(i, j));
      break;
    case SpaceKind::Alt:
      if (!m.is_alternating()) throw std::invalid_argument("matrix is not alternating");
      for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = i + 1; j < s.n; ++j) c.push_back(m(i, j));
      break;
    default:
      c.assign(m.data().begin(), m.data().end());
  }
  return RepVector(s, std::move(c));
}

std::vector<RepVector> space_basis(const Space& s, const Field& f) {
  std::vector<RepVector> out;
  if (s.kind != SpaceKind::Wedge3Sp) {
    for (std::size_t i = 0; i < s.coord_count(); ++i) out.push_back(RepVector::unit(s, f, i));
    return out;
  }
  Matrix k = kernel_basis(wedge::contraction(standard_symplectic(6, f), 3));
  for (std::size_t j = 0; j < k.cols(); ++j) {
    std::vector<FieldElement> c(k.rows());
    for (std::size_t i = 0; i < k.rows(); ++i) c[i] = k(i, j);
    out.emplace_back(s, std::move(c));
  }
  return out;
}

RepVector random_vector(const Space& s, const Field& f, std::int64_t height, Rng& rng) {
  if (s.kind != SpaceKind::Wedge3Sp) {
    std::vector<FieldElement> c;
    c.reserve(s.coord_count());
    for (std::size_t i = 0; i < s.coord_count(); ++i) c.push_back(field_sample_int(f, -height, height, rng));
    return RepVector(s, std::move(c));
  }
  static thread_local std::vector<std::pair<Field, std::vector<RepVector>>> cache;
  const std::vector<RepVector>* basis = nullptr;
  for (const auto& [cf, b] : cache)
    if (cf == f) basis = &b;
  if (!basis) {
    cache.emplace_back(f, space_basis(s, f));
    basis = &cache.back().second;
  }
  RepVector v = RepVector::zero(s, f);
  for (const auto& b : *basis) v += field_sample_int(f, -height, height, rng) * b;
  return v;
}

Matrix standard_symplectic(std::size_t n, const Field& f) {
  if (n % 2) throw std::invalid_argument("symplectic form needs even dimension");
  Matrix b(n, n, f);
  for (std::size_t i = 0; i < n; i += 2) {
    b(i, i + 1) = f.one();
    b(i + 1, i) = -f.one();
  }
  return b;
}

}  // namespace preserver
