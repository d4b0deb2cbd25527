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

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "preserver/field.hpp"

namespace preserver {

/**
 * Sparse multivariate polynomial with exact coefficients.
 *
 * Monomials are packed into a 64-bit key, six bits per exponent, so at most
 * ten variables and exponents below 64 are supported. Terms are kept sorted
 * by key with no zero coefficients; the zero polynomial has no terms.
 */
class Polynomial {
 public:
  static constexpr int kMaxVars = 10;
  static constexpr int kBits = 6;

  using Key = std::uint64_t;
  using Term = std::pair<Key, FieldElement>;

  Polynomial(const Field& field, int nvars);

  static Polynomial constant(const Field& field, int nvars, const FieldElement& c);
  static Polynomial variable(const Field& field, int nvars, int index);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  int total_degree() const;

  static int exponent(Key k, int var) { return static_cast<int>((k >> (kBits * var)) & ((1u << kBits) - 1)); }
  static int key_degree(Key k);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const FieldElement& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend Polynomial operator*(const FieldElement& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  FieldElement evaluate(std::span<const FieldElement> point) const;
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;
  Field field_;
  int nvars_;
  std::vector<Term> terms_;
};

// Ring helpers shared by the generic (scalar or symbolic) evaluators.
inline FieldElement zero_like(const FieldElement& x) { return x.field().zero(); }
inline Polynomial zero_like(const Polynomial& x) { return Polynomial(x.field(), x.nvars()); }
inline FieldElement one_like(const FieldElement& x) { return x.field().one(); }
inline Polynomial one_like(const Polynomial& x) { return Polynomial::constant(x.field(), x.nvars(), x.field().one()); }
inline const Field& field_of(const Polynomial& x) { return x.field(); }
inline Field field_of(const FieldElement& x) { return x.field(); }
inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline bool is_zero(const Polynomial& x) { return x.is_zero(); }

}  // namespace preserver
