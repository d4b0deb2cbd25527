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

#include "preserver/bruteforce.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

#include "preserver/minimality.hpp"
#include "preserver/preservers.hpp"

namespace preserver {

void CensusReport::finalize() {
  passed = true;
  for (const auto& [key, want] : expected) {
    auto it = counts.find(key);
    if (it == counts.end() || it->second != want) passed = false;
  }
}

std::uint64_t gl_order(std::size_t dim, std::uint64_t p) {
  std::uint64_t pd = 1;
  for (std::size_t i = 0; i < dim; ++i) pd *= p;
  std::uint64_t out = 1, pi = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    out *= pd - pi;
    pi *= p;
  }
  return out;
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void check_budget(std::size_t dim, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  if (std::pow(static_cast<double>(p), static_cast<double>(dim * dim)) > 1e9) {
    throw std::invalid_argument("enumeration budget exceeded: p^(dim^2) > 10^9");
  }
}

// Echelon basis with pivot columns; reduces a candidate row modulo the basis.
struct Echelon {
  std::uint64_t p;
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::size_t> pivots;

  // Returns false if `row` lies in the span; otherwise appends its reduction.
  bool push(std::vector<std::uint32_t> row) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const std::uint64_t c = row[pivots[k]];
      if (!c) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = static_cast<std::uint32_t>((row[j] + (p - c) * rows[k][j]) % p);
    }
    std::size_t piv = 0;
    while (piv < row.size() && !row[piv]) ++piv;
    if (piv == row.size()) return false;
    std::uint64_t inv = 1;
    for (std::uint64_t e = p - 2, b = row[piv]; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (auto& x : row) x = static_cast<std::uint32_t>(x * inv % p);
    rows.push_back(std::move(row));
    pivots.push_back(piv);
    return true;
  }
};

void extend(std::size_t dim, std::uint64_t p, std::size_t chunk, SmallMatrix& m, std::size_t row, Echelon& ech,
            const std::function<void(std::size_t, const SmallMatrix&)>& visit) {
  if (row == dim) {
    visit(chunk, m);
    return;
  }
  const std::uint64_t count = ipow(p, dim);
  std::vector<std::uint32_t> r(dim);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (std::size_t j = dim; j-- > 0;) {
      r[j] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    Echelon next = ech;
    if (!next.push(r)) continue;
    for (std::size_t j = 0; j < dim; ++j) m[row * dim + j] = r[j];
    extend(dim, p, chunk, m, row + 1, next, visit);
  }
}

}  // namespace

std::size_t invertible_chunks(std::size_t dim, std::uint64_t p) { return static_cast<std::size_t>(ipow(p, dim)); }

void enumerate_invertible(std::size_t dim, std::uint64_t p,
                          const std::function<void(std::size_t, const SmallMatrix&)>& visit, Execution exec) {
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  check_budget(dim, p);
  parallel_for(
      invertible_chunks(dim, p),
      [&](std::size_t chunk) {
        std::vector<std::uint32_t> first(dim);
        std::uint64_t c = chunk;
        for (std::size_t j = dim; j-- > 0;) {
          first[j] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        Echelon ech{p, {}, {}};
        if (!ech.push(first)) return;
        SmallMatrix m(dim * dim);
        for (std::size_t j = 0; j < dim; ++j) m[j] = first[j];
        extend(dim, p, chunk, m, 1, ech, visit);
      },
      exec);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

CensusReport case_scalar_fixer(Execution exec) {
  const auto t0 = Clock::now();
  constexpr std::uint64_t p = 3;
  // Symm_2 coordinates (a, b, c) for [[a, b], [b, c]]; rank 1 iff nonzero with ac = b^2.
  std::vector<std::array<std::uint32_t, 3>> lines;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c) {
        if (!a && !b && !c) continue;
        if ((a * c) % p != (b * b) % p) continue;
        // One representative per line: first nonzero coordinate equal to 1.
        const std::uint32_t lead = a ? a : b ? b : c;
        if (lead == 1) lines.push_back({a, b, c});
      }
  const std::size_t chunks = invertible_chunks(3, p);
  std::vector<std::uint64_t> total(chunks, 0), fixers(chunks, 0), scalar_fixers(chunks, 0);
  enumerate_invertible(
      3, p,
      [&](std::size_t chunk, const SmallMatrix& m) {
        ++total[chunk];
        for (const auto& v : lines) {
          std::uint32_t w[3];
          for (int i = 0; i < 3; ++i) w[i] = (m[i * 3] * v[0] + m[i * 3 + 1] * v[1] + m[i * 3 + 2] * v[2]) % p;
          // w must be lambda v for some lambda != 0.
          const int lead = v[0] ? 0 : v[1] ? 1 : 2;
          const std::uint32_t lambda = w[lead];
          if (!lambda) return;
          for (int i = 0; i < 3; ++i)
            if (w[i] != (lambda * v[i]) % p) return;
        }
        ++fixers[chunk];
        const bool scalar = m[1] == 0 && m[2] == 0 && m[3] == 0 && m[5] == 0 && m[6] == 0 && m[7] == 0 &&
                            m[0] == m[4] && m[4] == m[8];
        if (scalar) ++scalar_fixers[chunk];
      },
      exec);
  CensusReport r;
  r.case_id = "rk1fix-symm2-f3";
  r.field = "F3";
  for (std::size_t i = 0; i < chunks; ++i) {
    r.total += total[i];
    r.counts["fixers"] += fixers[i];
    r.counts["scalar_fixers"] += scalar_fixers[i];
  }
  r.counts["invertible_maps"] = r.total;
  r.counts["rank1_lines"] = lines.size();
  r.expected = {{"invertible_maps", gl_order(3, p)}, {"fixers", 2}, {"scalar_fixers", 2}, {"rank1_lines", 4}};
  r.finalize();
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

CensusReport case_cubic_oracles_f5(Execution exec) {
  const auto t0 = Clock::now();
  const Field f5 = Field::prime(5);
  const InvariantForm disc = InvariantForm::cubic_disc(f5);
  constexpr std::size_t n = 625;
  std::vector<std::uint8_t> rank_v(n), rrs_v(n), rad_v(n);
  parallel_for(
      n,
      [&](std::size_t i) {
        std::vector<FieldElement> c;
        std::size_t x = i;
        for (int k = 0; k < 4; ++k, x /= 5) c.push_back(f5.from_int(static_cast<std::int64_t>(x % 5)));
        const RepVector v(Space::cubic(), c);
        rank_v[i] = minimal_by_rank(disc, v).is_minimal;
        rrs_v[i] = minimal_by_rrs(disc, v).is_minimal;
        rad_v[i] = minimal_by_radical(disc, v).is_minimal;
      },
      exec);
  CensusReport r;
  r.case_id = "cubic-oracles-f5";
  r.field = "F5";
  r.total = n;
  std::uint64_t minimal = 0, disagree = 0, rrs_count = 0, rad_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    minimal += rank_v[i];
    rrs_count += rrs_v[i];
    rad_count += rad_v[i];
    disagree += !(rank_v[i] == rrs_v[i] && rrs_v[i] == rad_v[i]);
  }
  r.counts = {{"vectors", n}, {"minimal_rank", minimal}, {"minimal_rrs", rrs_count},
              {"minimal_radical", rad_count}, {"disagreements", disagree}};
  r.expected = {{"vectors", 625}, {"minimal_rank", 24}, {"minimal_rrs", 24}, {"minimal_radical", 24}, {"disagreements", 0}};
  r.finalize();
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

CensusReport case_cubic_preserver_census_f5(Execution exec) {
  const auto t0 = Clock::now();
  constexpr std::uint64_t p = 5;
  const Field f5 = Field::prime(p);
  const InvariantForm disc = InvariantForm::cubic_disc(f5);
  // Discriminant of every cubic, indexed by a0 + 5 a1 + 25 a2 + 125 a3.
  std::vector<std::uint32_t> dtab(625);
  for (std::size_t i = 0; i < 625; ++i) {
    std::vector<FieldElement> c;
    std::size_t x = i;
    for (int k = 0; k < 4; ++k, x /= 5) c.push_back(f5.from_int(static_cast<std::int64_t>(x % 5)));
    dtab[i] = static_cast<std::uint32_t>(disc.eval(RepVector(Space::cubic(), c)).residue());
  }
  std::vector<SmallMatrix> group;
  enumerate_invertible(2, p, [&](std::size_t, const SmallMatrix& m) { group.push_back(m); });

  const std::size_t pairs = 4 * group.size();
  std::vector<std::uint8_t> filtered(pairs), preserves(pairs);
  std::vector<std::array<std::uint32_t, 16>> induced(pairs);
  parallel_for(
      pairs,
      [&](std::size_t idx) {
        const std::int64_t c = static_cast<std::int64_t>(idx % 4) + 1;
        const SmallMatrix& gm = group[idx / 4];
        Matrix g(2, 2, f5);
        for (std::size_t i = 0; i < 4; ++i) g(i / 2, i % 2) = f5.from_int(gm[i]);
        const PreserverElement t(Space::cubic(), f5, CubicComposition{f5.from_int(c), g});
        const Matrix& m = t.coordinate_matrix();
        std::array<std::uint32_t, 16> mm{};
        for (std::size_t i = 0; i < 16; ++i) mm[i] = static_cast<std::uint32_t>(m(i / 4, i % 4).residue());
        induced[idx] = mm;
        filtered[idx] = constraint_satisfied(t, disc);
        bool ok = true;
        for (std::size_t v = 0; v < 625 && ok; ++v) {
          std::uint32_t a[4], w = 0;
          std::size_t x = v;
          for (int k = 0; k < 4; ++k, x /= 5) a[k] = static_cast<std::uint32_t>(x % 5);
          for (int i = 3; i >= 0; --i) {
            const std::uint32_t wi = (mm[i * 4] * a[0] + mm[i * 4 + 1] * a[1] + mm[i * 4 + 2] * a[2] + mm[i * 4 + 3] * a[3]) % p;
            w = w * 5 + wi;
          }
          ok = dtab[w] == dtab[v];
        }
        preserves[idx] = ok;
      },
      exec);
  CensusReport r;
  r.case_id = "cubic-census-f5";
  r.field = "F5";
  r.total = pairs;
  std::uint64_t nf = 0, np = 0, exceptions = 0;
  std::set<std::array<std::uint32_t, 16>> distinct;
  for (std::size_t i = 0; i < pairs; ++i) {
    nf += filtered[i];
    np += preserves[i];
    exceptions += filtered[i] != preserves[i];
    if (filtered[i]) distinct.insert(induced[i]);
  }
  r.counts = {{"pairs", pairs},
              {"group_order", group.size()},
              {"filtered_pairs", nf},
              {"preserving_pairs", np},
              {"exceptions", exceptions},
              {"distinct_induced_maps", distinct.size()}};
  r.expected = {{"pairs", 1920},           {"group_order", 480}, {"filtered_pairs", 960},
                {"preserving_pairs", 960}, {"exceptions", 0},    {"distinct_induced_maps", 240}};
  r.finalize();
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

const std::vector<std::string>& bruteforce_cases() {
  static const std::vector<std::string> ids{"rk1fix-symm2-f3", "cubic-oracles-f5", "cubic-census-f5"};
  return ids;
}

CensusReport run_bruteforce_case(const std::string& id, Execution exec) {
  if (id == "rk1fix-symm2-f3") return case_scalar_fixer(exec);
  if (id == "cubic-oracles-f5") return case_cubic_oracles_f5(exec);
  if (id == "cubic-census-f5") return case_cubic_preserver_census_f5(exec);
  throw std::invalid_argument("unknown bruteforce case: " + id);
}

}  // namespace preserver
