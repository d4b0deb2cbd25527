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

#include "preserver/groups.hpp"

#include <algorithm>
#include <stdexcept>

namespace preserver {

namespace {

std::vector<FieldElement> small_vector(std::size_t n, const Field& f, Rng& rng) {
  std::vector<FieldElement> u;
  u.reserve(n);
  for (std::size_t i = 0; i < n; ++i) u.push_back(field_sample_int(f, -2, 2, rng));
  return u;
}

FieldElement form(const Matrix& s, std::span<const FieldElement> x, std::span<const FieldElement> y) {
  const auto sy = s.apply(y);
  FieldElement acc = s.field().zero();
  for (std::size_t i = 0; i < sy.size(); ++i) acc += x[i] * sy[i];
  return acc;
}

// I + l a (a^t M): rank-one update shared by transvections and reflections.
Matrix rank_one_update(const Matrix& m, std::span<const FieldElement> a, const FieldElement& l) {
  const std::size_t n = m.rows();
  Matrix row(1, n, m.field());
  for (std::size_t j = 0; j < n; ++j) {
    FieldElement s = m.field().zero();
    for (std::size_t i = 0; i < n; ++i) s += a[i] * m(i, j);
    row(0, j) = s;
  }
  Matrix t = Matrix::identity(n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) += l * a[i] * row(0, j);
  return t;
}

}  // namespace

Matrix random_symplectic(const Matrix& b, Rng& rng, std::size_t word_length) {
  const std::size_t n = b.rows();
  const Field& f = b.field();
  if (!word_length) word_length = 2 * n;
  Matrix g = Matrix::identity(n, f);
  for (std::size_t w = 0; w < word_length; ++w) {
    auto u = small_vector(n, f, rng);
    const FieldElement l = field_sample_int(f, 1, 2, rng) * (rng() & 1 ? f.one() : -f.one());
    g = rank_one_update(b, u, l) * g;
  }
  return g;
}

Matrix random_orthogonal(const Matrix& s, Rng& rng, std::size_t word_length) {
  const std::size_t n = s.rows();
  const Field& f = s.field();
  if (!word_length) word_length = n;
  Matrix g = Matrix::identity(n, f);
  for (std::size_t w = 0; w < word_length;) {
    auto a = small_vector(n, f, rng);
    const FieldElement q = form(s, a, a);
    if (q.is_zero()) continue;
    g = rank_one_update(s, a, -f.from_int(2) / q) * g;
    ++w;
  }
  return g;
}

std::vector<FieldElement> random_isotropic(const Matrix& s, Rng& rng) {
  const std::size_t n = s.rows();
  const Field& f = s.field();
  // Seed with a null vector of the split part, then mix by the orthogonal group.
  bool split = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s(i, j) != (i + j + 1 == n ? f.one() : f.zero())) split = false;
  std::vector<FieldElement> v(n, f.zero());
  if (split) {
    do {
      for (std::size_t i = 0; i < n / 2; ++i) v[i] = field_sample_int(f, -3, 3, rng);
    } while (std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); }));
  } else {
    // Generic S: search small integer vectors.
    for (int tries = 0;; ++tries) {
      if (tries > 100000) throw std::runtime_error("no isotropic vector found for S");
      v = small_vector(n, f, rng);
      bool nz = std::any_of(v.begin(), v.end(), [](const FieldElement& x) { return !x.is_zero(); });
      if (nz && form(s, v, v).is_zero()) break;
    }
  }
  return random_orthogonal(s, rng, 2).apply(v);
}

}  // namespace preserver
