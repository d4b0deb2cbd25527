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

#include "preserver/matrix.hpp"

namespace preserver {

/// Word in symplectic transvections x -> x + l b(u, x) u; determinant 1, g^t b g = b.
Matrix random_symplectic(const Matrix& b, Rng& rng, std::size_t word_length = 0);

/// Word in reflections x -> x - 2 S(x, a) / S(a, a) a; g^t S g = S.
Matrix random_orthogonal(const Matrix& s, Rng& rng, std::size_t word_length = 0);

/// Random vector with v^t S v = 0, v != 0. Needs S to have an isotropic
/// vector; the split form always does.
std::vector<FieldElement> random_isotropic(const Matrix& s, Rng& rng);

}  // namespace preserver
