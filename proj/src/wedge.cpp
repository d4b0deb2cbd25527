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

#include "preserver/wedge.hpp"

#include <algorithm>
#include <stdexcept>

namespace preserver::wedge {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t subset_rank(std::span<const std::size_t> sorted) {
  std::size_t r = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) r += binom(sorted[k], k + 1);
  return r;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t n) {
  std::vector<std::vector<std::size_t>> out(binom(n, d));
  if (d == 0) return out;
  std::vector<std::size_t> cur(d);
  for (std::size_t i = 0; i < d; ++i) cur[i] = i;
  for (std::size_t r = 0; r < out.size(); ++r) {
    out[r] = cur;
    // Colex successor: bump the lowest position that can move.
    std::size_t i = 0;
    while (i + 1 < d && cur[i] + 1 == cur[i + 1]) ++i;
    ++cur[i];
    for (std::size_t k = 0; k < i; ++k) cur[k] = k;
  }
  return out;
}

int sort_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::vector<FieldElement> product(std::span<const FieldElement> x, std::size_t a,
                                  std::span<const FieldElement> y, std::size_t b, std::size_t n) {
  if (x.size() != binom(n, a) || y.size() != binom(n, b)) throw std::invalid_argument("wedge coordinate count");
  const Field f = x.empty() ? y[0].field() : x[0].field();
  std::vector<FieldElement> out(binom(n, a + b), f.zero());
  const auto sa = subsets(a, n);
  const auto sb = subsets(b, n);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (y[j].is_zero()) continue;
      std::vector<std::size_t> u = sa[i];
      u.insert(u.end(), sb[j].begin(), sb[j].end());
      const int s = sort_sign(u);
      if (s == 0) continue;
      FieldElement t = x[i] * y[j];
      out[subset_rank(u)] += s > 0 ? t : -t;
    }
  }
  return out;
}

std::vector<FieldElement> decomposable(std::span<const std::vector<FieldElement>> vectors) {
  if (vectors.empty()) throw std::invalid_argument("empty wedge product");
  const std::size_t n = vectors[0].size();
  std::vector<FieldElement> acc = vectors[0];
  for (std::size_t k = 1; k < vectors.size(); ++k) acc = product(acc, k, vectors[k], 1, n);
  return acc;
}

Matrix exterior_power(const Matrix& g, std::size_t d) {
  if (!g.is_square()) throw std::invalid_argument("exterior power of a non-square matrix");
  const std::size_t n = g.rows();
  const auto s = subsets(d, n);
  Matrix out(s.size(), s.size(), g.field());
  Matrix minor(d, d, g.field());
  for (std::size_t r = 0; r < s.size(); ++r) {
    for (std::size_t c = 0; c < s.size(); ++c) {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) minor(i, j) = g(s[r][i], s[c][j]);
      out(r, c) = determinant(minor);
    }
  }
  return out;
}

Matrix left_wedge_map(std::span<const FieldElement> v, std::size_t d, std::size_t n) {
  const Field f = v[0].field();
  Matrix out(binom(n, d + 1), n, f);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElement> e(n, f.zero());
    e[i] = f.one();
    auto col = product(e, 1, v, d, n);
    for (std::size_t r = 0; r < col.size(); ++r) out(r, i) = col[r];
  }
  return out;
}

Matrix hodge_star(std::size_t d, std::size_t n, const Field& f) {
  const auto s = subsets(d, n);
  Matrix out(binom(n, n - d), s.size(), f);
  for (std::size_t c = 0; c < s.size(); ++c) {
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(s[c].begin(), s[c].end(), i) == s[c].end()) comp.push_back(i);
    std::vector<std::size_t> all = s[c];
    all.insert(all.end(), comp.begin(), comp.end());
    const int sign = sort_sign(all);
    out(subset_rank(comp), c) = sign > 0 ? f.one() : -f.one();
  }
  return out;
}

Matrix contraction(const Matrix& b, std::size_t d) {
  if (!b.is_square() || d < 2) throw std::invalid_argument("contraction needs a square form and degree >= 2");
  const std::size_t n = b.rows();
  const auto s = subsets(d, n);
  Matrix out(binom(n, d - 2), s.size(), b.field());
  for (std::size_t c = 0; c < s.size(); ++c) {
    const auto& idx = s[c];
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const FieldElement& w = b(idx[p], idx[q]);
        if (w.is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < d; ++k)
          if (k != p && k != q) rest.push_back(idx[k]);
        const std::size_t r = subset_rank(rest);
        if ((p + q) % 2 == 1) out(r, c) += w;
        else out(r, c) -= w;
      }
    }
  }
  return out;
}

const std::vector<KTerm>& k_operator_terms() {
  static const std::vector<KTerm> table = [] {
    std::vector<KTerm> t;
    const auto s3 = subsets(3, 6);
    for (std::size_t j = 0; j < 6; ++j) {
      for (std::size_t a = 0; a < s3.size(); ++a) {
        const auto& I = s3[a];
        const auto pos = std::find(I.begin(), I.end(), j);
        if (pos == I.end()) continue;
        const int contract_sign = (pos - I.begin()) % 2 ? -1 : 1;
        std::vector<std::size_t> rest;
        for (std::size_t i : I)
          if (i != j) rest.push_back(i);
        for (std::size_t b = 0; b < s3.size(); ++b) {
          std::vector<std::size_t> u = rest;
          u.insert(u.end(), s3[b].begin(), s3[b].end());
          const int s = sort_sign(u);
          if (s == 0) continue;
          std::size_t k = 0;
          while (k < 5 && u[k] == k) ++k;
          // e_k ^ e_{[6] \ k} = (-1)^k e_1 ^ ... ^ e_6.
          const int top_sign = k % 2 ? -1 : 1;
          t.push_back({k, j, a, b, contract_sign * s * top_sign});
        }
      }
    }
    return t;
  }();
  return table;
}

}  // namespace preserver::wedge
