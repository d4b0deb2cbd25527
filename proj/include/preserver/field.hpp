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

/**
 * @file field.hpp
 * @brief Exact scalars over the rationals and prime fields F_p (p >= 5).
 *
 * A FieldElement is either an arbitrary-precision rational (always stored
 * reduced, positive denominator) or a residue modulo an admissible prime.
 * Mixing elements of different fields in one operation throws.
 *
 * Characteristics 2 and 3 are rejected globally: the quartic pipeline
 * divides by 24 when polarizing.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace preserver {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class FieldElement;

/// Descriptor of the scalar field: Q (modulus 0) or F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime >= 5.
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "Fp:<prime>".
  static Field parse(std::string_view descriptor);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }
  std::string descriptor() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  /// Over F_p the denominator must be invertible.
  FieldElement from_rational(const mpq_class& q) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElement;
  explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

class FieldElement {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  /// Rational zero.
  FieldElement() : v_(mpq_class(0)) {}
  explicit FieldElement(mpq_class q);
  FieldElement(std::uint64_t value, std::uint64_t modulus);

  Field field() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  bool is_zero() const;
  bool is_one() const;

  /// Valid only for rational elements.
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  /// Valid only for residues.
  std::uint64_t residue() const { return std::get<Residue>(v_).value; }

  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// "n" for integers and residues, "p/q" otherwise.
  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& o) const;
  std::variant<mpq_class, Residue> v_;
};

/// Parses "p/q", "n" (and residues of those) into the given field.
FieldElement parse_element(const Field& field, std::string_view text);

/// Uniform residue over F_p; over Q a rational with |numerator| <= height and
/// 1 <= denominator <= height.
FieldElement field_sample(const Field& field, std::uint64_t height_bound, Rng& rng);
FieldElement field_sample(const Field& field, std::uint64_t height_bound, std::uint64_t seed);
/// As field_sample but never zero.
FieldElement field_sample_nonzero(const Field& field, std::uint64_t height_bound, Rng& rng);

/// Integer in [lo, hi] lifted into the field.
FieldElement field_sample_int(const Field& field, std::int64_t lo, std::int64_t hi, Rng& rng);

/// Returns x with x^k = a when one exists in the field.
std::optional<FieldElement> nth_root(const FieldElement& a, unsigned k);

}  // namespace preserver
