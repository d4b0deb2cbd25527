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
 * @file wedge.hpp
 * @brief Exterior-algebra coordinates.
 *
 * Basis vectors of wedge^d k^n are e_I for increasing index tuples I, ordered
 * colexicographically (compare the largest index first). Indices are
 * zero-based here; e_{i1} ^ ... ^ e_{id} with unsorted indices is normalized by
 * the parity of the sorting permutation.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "preserver/matrix.hpp"

namespace preserver::wedge {

std::size_t binom(std::size_t n, std::size_t k);

/// Colex rank of an increasing index tuple.
std::size_t subset_rank(std::span<const std::size_t> sorted);
/// All increasing d-tuples of {0..n-1} in colex order.
std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t n);

/// Sorts `idx` in place and returns the sign of the sorting permutation, or 0
/// if an index repeats.
int sort_sign(std::vector<std::size_t>& idx);

/// x ^ y for x in wedge^a k^n, y in wedge^b k^n.
std::vector<FieldElement> product(std::span<const FieldElement> x, std::size_t a,
                                  std::span<const FieldElement> y, std::size_t b, std::size_t n);

/// v1 ^ ... ^ vd for vectors in k^n.
std::vector<FieldElement> decomposable(std::span<const std::vector<FieldElement>> vectors);

/// Matrix of wedge^d g on wedge^d k^n (entries are d x d minors).
Matrix exterior_power(const Matrix& g, std::size_t d);

/// Matrix of u -> u ^ v from k^n to wedge^(d+1) k^n.
Matrix left_wedge_map(std::span<const FieldElement> v, std::size_t d, std::size_t n);

/// e_I -> sgn(I, I^c) e_{I^c}, wedge^d k^n -> wedge^(n-d) k^n.
Matrix hodge_star(std::size_t d, std::size_t n, const Field& f);

/**
 * Contraction by a skew form b: wedge^d k^n -> wedge^(d-2) k^n,
 * v1^...^vd -> sum_{i<j} (-1)^(i+j-1) b(vi, vj) v1^..^vi^..^vj^..^vd
 * (so e1^e2^e3 -> b12 e3 - b13 e2 + b23 e1).
 */
Matrix contraction(const Matrix& b, std::size_t d);

/// One term of K_v for v in wedge^3 k^6: K[row][col] += sign * v[a] * v[b].
struct KTerm {
  std::size_t row;
  std::size_t col;
  std::size_t a;
  std::size_t b;
  int sign;
};

/**
 * K_v(eps_j) = (iota_{eps_j} v) ^ v read as a linear form through the top-wedge
 * trivialization (x -> coefficient of x ^ w). The table is quadratic in v.
 */
const std::vector<KTerm>& k_operator_terms();

}  // namespace preserver::wedge
