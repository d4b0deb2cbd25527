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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "preserver/field.hpp"

namespace preserver {

/// Dense row-major matrix over one exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Field& field);

  static Matrix identity(std::size_t n, const Field& field);
  static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix diagonal(std::span<const FieldElement> diag, const Field& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Field& field() const { return field_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const FieldElement> data() const { return data_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  /// Skew with zero diagonal.
  bool is_alternating() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const FieldElement& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const FieldElement& c) { return a *= c; }
  friend Matrix operator*(const FieldElement& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::vector<FieldElement> apply(std::span<const FieldElement> v) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<FieldElement> data_;
};

/// Exact rank; fraction-free (Bareiss) over Q, plain elimination over F_p.
std::size_t rank(const Matrix& m);
FieldElement determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Columns form a basis of {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);
/// Some solution of m x = b, if one exists.
std::optional<std::vector<FieldElement>> solve(const Matrix& m, std::span<const FieldElement> b);

/// Random matrix with entries from field_sample_int(-height, height).
Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& field, std::int64_t height, Rng& rng);
Matrix random_invertible(std::size_t n, const Field& field, std::int64_t height, Rng& rng);
/// Integer matrix with determinant exactly +1: a random word in elementary
/// transvections (entries stay small).
Matrix random_unimodular(std::size_t n, const Field& field, Rng& rng, std::size_t word_length = 0);

}  // namespace preserver
