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
#include <string>
#include <vector>

#include "preserver/forms.hpp"

namespace preserver {

enum class Oracle { Rank, Rrs, Radical };

std::string oracle_name(Oracle o);
Oracle parse_oracle(std::string_view name);

struct MinimalityVerdict {
  bool is_minimal = false;
  Oracle oracle = Oracle::Rank;
  /// Optional certificate: for cubics (c, p, q) with v = c (p x + q y)^3; for
  /// rank tests the rank; for the radical test the radical dimension.
  std::vector<FieldElement> witness;
  std::string witness_kind;
  std::size_t trials = 0;
};

/// Exact policy tests coefficient polynomials symbolically in v'; randomized
/// samples v' (rational field only).
struct RrsPolicy {
  bool exact = true;
  std::size_t trials = 32;
  std::uint64_t seed = 0;
};

/// Structural test per line: rank 1 (symmetric, square), rank 2 (alternating),
/// isotropy (quadric), scalar multiple of a cube (cubics), annihilator
/// dimension 3 (wedge^3), rank 1 with isotropic row space (2 x n), all
/// flattenings rank 1 (2 x 2 x 2).
MinimalityVerdict minimal_by_rank(const InvariantForm& f, const RepVector& v);

/**
 * Degree-in-t test: v is minimal iff t -> f(t v + v') has degree at most 1 for
 * every v' (lines 1, 2, 4, 5). Binary cubics use the bound 2, which is where the
 * cube orbit separates from the x^2 y orbit. Coefficients come from Lagrange
 * interpolation at t = 0..deg f, so the field must have more than deg f elements.
 */
MinimalityVerdict minimal_by_rrs(const InvariantForm& f, const RepVector& v, const RrsPolicy& policy = {});

/// Radical test for quartic lines: radical of b_v has dimension dim V - 1.
MinimalityVerdict minimal_by_radical(const InvariantForm& f, const RepVector& v);

MinimalityVerdict minimal_by(Oracle o, const InvariantForm& f, const RepVector& v, const RrsPolicy& policy = {});

/// Whether the oracle applies to the form (RRS: lines 1, 2, 4, 5, 6; radical:
/// quartic lines 6, 7, 8, 11).
bool oracle_applies(Oracle o, const InvariantForm& f);

/// Random minimal element of the form's space.
RepVector sample_minimal(const InvariantForm& f, Rng& rng);

}  // namespace preserver
