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

#include "preserver/minimality.hpp"

#include <algorithm>
#include <stdexcept>

#include "preserver/groups.hpp"
#include "preserver/multilinear.hpp"
#include "preserver/wedge.hpp"

namespace preserver {

std::string oracle_name(Oracle o) {
  switch (o) {
    case Oracle::Rank: return "rank";
    case Oracle::Rrs: return "rrs";
    case Oracle::Radical: return "radical";
  }
  return "?";
}

Oracle parse_oracle(std::string_view name) {
  if (name == "rank") return Oracle::Rank;
  if (name == "rrs") return Oracle::Rrs;
  if (name == "radical") return Oracle::Radical;
  throw std::invalid_argument("unknown oracle: " + std::string(name));
}

namespace {

MinimalityVerdict verdict(Oracle o, bool m) {
  MinimalityVerdict v;
  v.is_minimal = m;
  v.oracle = o;
  return v;
}

void check_space(const InvariantForm& f, const RepVector& v) {
  if (!(v.space == f.space())) {
    throw std::invalid_argument("vector in " + v.space.describe() + " does not lie in " + f.space().describe());
  }
}

MinimalityVerdict with_rank(bool m, std::size_t r, const Field& k) {
  MinimalityVerdict v = verdict(Oracle::Rank, m);
  v.witness = {k.from_int(static_cast<std::int64_t>(r))};
  v.witness_kind = "rank";
  return v;
}

MinimalityVerdict cube_test(const RepVector& v) {
  const auto& a = v.coords;
  const Field k = v.field();
  MinimalityVerdict out = verdict(Oracle::Rank, false);
  out.witness_kind = "scaled-cube";
  if (a[0].is_zero()) {
    // c y^3 is the only option.
    if (a[1].is_zero() && a[2].is_zero() && !a[3].is_zero()) {
      out.is_minimal = true;
      out.witness = {a[3], k.zero(), k.one()};
    }
    return out;
  }
  // a0 (x + q y)^3 = a0 x^3 + 3 a0 q x^2 y + 3 a0 q^2 x y^2 + a0 q^3 y^3.
  const FieldElement q = a[1] / (k.from_int(3) * a[0]);
  if (a[2] == k.from_int(3) * a[0] * q * q && a[3] == a[0] * q * q * q) {
    out.is_minimal = true;
    out.witness = {a[0], k.one(), q};
  }
  return out;
}

bool flattening_rank_one(const std::vector<FieldElement>& c, int axis) {
  // Rows indexed by the chosen factor, columns by the other two.
  Matrix m(2, 4, c[0].field());
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const std::size_t bits[3] = {idx >> 2 & 1, idx >> 1 & 1, idx & 1};
    std::size_t col = 0;
    for (int t = 0; t < 3; ++t)
      if (t != axis) col = col * 2 + bits[t];
    m(bits[axis], col) = c[idx];
  }
  return rank(m) == 1;
}

int rrs_bound(const InvariantForm& f) { return f.line() == FormLine::CubicDisc ? 2 : 1; }

// Lagrange weights: coefficient of t^k in the interpolant through (j, y_j), j = 0..d.
std::vector<std::vector<FieldElement>> coefficient_weights(const Field& k, int d) {
  // Invert the Vandermonde matrix V_{j,k} = j^k.
  Matrix v(d + 1, d + 1, k);
  for (int j = 0; j <= d; ++j)
    for (int e = 0; e <= d; ++e) v(j, e) = k.from_int(j).pow(e);
  auto inv = inverse(v);
  if (!inv) throw std::invalid_argument("not enough distinct interpolation nodes in the field");
  std::vector<std::vector<FieldElement>> w(d + 1, std::vector<FieldElement>(d + 1));
  for (int e = 0; e <= d; ++e)
    for (int j = 0; j <= d; ++j) w[e][j] = (*inv)(e, j);
  return w;
}

}  // namespace

bool oracle_applies(Oracle o, const InvariantForm& f) {
  switch (o) {
    case Oracle::Rank: return true;
    case Oracle::Rrs: return f.table_line() <= 6;
    case Oracle::Radical: return f.degree() == 4 && f.table_line() >= 6;
  }
  return false;
}

MinimalityVerdict minimal_by_rank(const InvariantForm& f, const RepVector& v) {
  check_space(f, v);
  const Field& k = f.field();
  if (v.is_zero()) return verdict(Oracle::Rank, false);
  switch (f.line()) {
    case FormLine::SymmDet:
    case FormLine::SquareDet: {
      const std::size_t r = rank(v);
      return with_rank(r == 1, r, k);
    }
    case FormLine::SkewPf: {
      const std::size_t r = rank(v);
      return with_rank(r == 2, r, k);
    }
    case FormLine::Quadric: return verdict(Oracle::Rank, f.eval(v).is_zero());
    case FormLine::CubicDisc: return cube_test(v);
    case FormLine::Wedge36:
    case FormLine::Sp6: {
      const std::size_t d = wedge_annihilator_dim(v);
      MinimalityVerdict out = verdict(Oracle::Rank, d == 3);
      out.witness = {k.from_int(static_cast<std::int64_t>(d))};
      out.witness_kind = "annihilator-dim";
      return out;
    }
    case FormLine::Mat2n: {
      const std::size_t r = rank(v);
      if (r != 1) return with_rank(false, r, k);
      const Matrix x = to_matrix(v);
      return with_rank((x * f.gram() * x.transpose()).is_zero(), r, k);
    }
    case FormLine::Hyperdet: {
      bool ok = true;
      for (int axis = 0; axis < 3 && ok; ++axis) ok = flattening_rank_one(v.coords, axis);
      return verdict(Oracle::Rank, ok);
    }
  }
  throw std::logic_error("unhandled form");
}

MinimalityVerdict minimal_by_rrs(const InvariantForm& f, const RepVector& v, const RrsPolicy& policy) {
  check_space(f, v);
  if (!oracle_applies(Oracle::Rrs, f)) {
    throw std::invalid_argument("degree-in-t criterion only covers lines 1-6, not " + f.descriptor());
  }
  const Field& k = f.field();
  const int d = f.degree();
  if (!k.is_rational() && k.modulus() <= static_cast<std::uint64_t>(d)) {
    throw std::invalid_argument("not enough distinct interpolation nodes in the field");
  }
  if (v.is_zero()) return verdict(Oracle::Rrs, false);
  const int bound = rrs_bound(f);
  const auto weights = coefficient_weights(k, d);
  const std::size_t dim = f.space().coord_count();

  if (policy.exact) {
    if (dim > static_cast<std::size_t>(Polynomial::kMaxVars)) {
      throw std::invalid_argument("symbolic policy rejected for dim > 10 (" + f.space().describe() + ")");
    }
    const int nv = static_cast<int>(dim);
    std::vector<Polynomial> values;
    for (int j = 0; j <= d; ++j) {
      std::vector<Polynomial> c;
      c.reserve(dim);
      for (std::size_t i = 0; i < dim; ++i)
        c.push_back(Polynomial::variable(k, nv, static_cast<int>(i)) +
                    Polynomial::constant(k, nv, k.from_int(j) * v.coords[i]));
      values.push_back(f.eval_coords<Polynomial>(c));
    }
    for (int e = bound + 1; e <= d; ++e) {
      Polynomial coef(k, nv);
      for (int j = 0; j <= d; ++j) coef += values[j] * weights[e][j];
      if (!coef.is_zero()) return verdict(Oracle::Rrs, false);
    }
    return verdict(Oracle::Rrs, true);
  }

  if (!k.is_rational()) {
    throw std::invalid_argument("randomized policy is rejected over finite fields; use the exact policy");
  }
  Rng rng(policy.seed);
  MinimalityVerdict out = verdict(Oracle::Rrs, true);
  for (std::size_t t = 0; t < policy.trials; ++t) {
    ++out.trials;
    std::vector<FieldElement> vp;
    for (std::size_t i = 0; i < dim; ++i) vp.push_back(field_sample_int(k, -(1 << 20), 1 << 20, rng));
    std::vector<FieldElement> values;
    for (int j = 0; j <= d; ++j) {
      std::vector<FieldElement> c(dim);
      for (std::size_t i = 0; i < dim; ++i) c[i] = vp[i] + k.from_int(j) * v.coords[i];
      values.push_back(f.eval_coords<FieldElement>(c));
    }
    for (int e = bound + 1; e <= d; ++e) {
      FieldElement coef = k.zero();
      for (int j = 0; j <= d; ++j) coef += values[j] * weights[e][j];
      if (!coef.is_zero()) {
        out.is_minimal = false;
        return out;
      }
    }
  }
  return out;
}

MinimalityVerdict minimal_by_radical(const InvariantForm& f, const RepVector& v) {
  check_space(f, v);
  if (!oracle_applies(Oracle::Radical, f)) {
    throw std::invalid_argument("radical criterion needs a quartic form on lines 6-8, 11, not " + f.descriptor());
  }
  if (v.is_zero()) return verdict(Oracle::Radical, false);
  const std::size_t r = radical_dimension(bilinear_bx(f, v));
  MinimalityVerdict out = verdict(Oracle::Radical, r + 1 == f.space().dim());
  out.witness = {f.field().from_int(static_cast<std::int64_t>(r))};
  out.witness_kind = "radical-dim";
  return out;
}

MinimalityVerdict minimal_by(Oracle o, const InvariantForm& f, const RepVector& v, const RrsPolicy& policy) {
  switch (o) {
    case Oracle::Rank: return minimal_by_rank(f, v);
    case Oracle::Rrs: return minimal_by_rrs(f, v, policy);
    case Oracle::Radical: return minimal_by_radical(f, v);
  }
  throw std::logic_error("unhandled oracle");
}

namespace {

std::vector<FieldElement> nonzero_vector(std::size_t n, const Field& k, Rng& rng) {
  std::vector<FieldElement> u(n, k.zero());
  while (std::all_of(u.begin(), u.end(), [](const FieldElement& x) { return x.is_zero(); })) {
    for (auto& x : u) x = field_sample_int(k, -4, 4, rng);
  }
  return u;
}

Matrix outer(std::span<const FieldElement> u, std::span<const FieldElement> w, const Field& k) {
  Matrix m(u.size(), w.size(), k);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = u[i] * w[j];
  return m;
}

}  // namespace

RepVector sample_minimal(const InvariantForm& f, Rng& rng) {
  const Field& k = f.field();
  const std::size_t n = f.n();
  const FieldElement c = field_sample_nonzero(k, 4, rng);
  switch (f.line()) {
    case FormLine::SymmDet: {
      auto u = nonzero_vector(n, k, rng);
      return c * from_matrix(f.space(), outer(u, u, k));
    }
    case FormLine::SkewPf: {
      for (;;) {
        auto u = nonzero_vector(n, k, rng);
        auto w = nonzero_vector(n, k, rng);
        Matrix m = outer(u, w, k) - outer(w, u, k);
        if (rank(m) == 2) return c * from_matrix(f.space(), m);
      }
    }
    case FormLine::SquareDet: {
      auto u = nonzero_vector(n, k, rng);
      auto w = nonzero_vector(n, k, rng);
      return from_matrix(f.space(), outer(u, w, k));
    }
    case FormLine::Quadric: return c * RepVector(f.space(), random_isotropic(f.gram(), rng));
    case FormLine::CubicDisc: {
      auto l = nonzero_vector(2, k, rng);
      const FieldElement &p = l[0], &q = l[1];
      const FieldElement three = k.from_int(3);
      return c * RepVector(f.space(), {p * p * p, three * p * p * q, three * p * q * q, q * q * q});
    }
    case FormLine::Wedge36: {
      for (;;) {
        std::vector<std::vector<FieldElement>> vs;
        for (int i = 0; i < 3; ++i) vs.push_back(nonzero_vector(6, k, rng));
        RepVector v(f.space(), wedge::decomposable(vs));
        if (!v.is_zero()) return c * v;
      }
    }
    case FormLine::Sp6: {
      // e1 ^ e3 ^ e5 spans a Lagrangian; move it by a random symplectic map.
      const Matrix g = random_symplectic(f.gram(), rng);
      std::vector<std::vector<FieldElement>> vs;
      for (std::size_t col : {0u, 2u, 4u}) {
        std::vector<FieldElement> e(6);
        for (std::size_t i = 0; i < 6; ++i) e[i] = g(i, col);
        vs.push_back(e);
      }
      return c * RepVector(f.space(), wedge::decomposable(vs));
    }
    case FormLine::Mat2n: {
      auto a = nonzero_vector(2, k, rng);
      auto w = random_isotropic(f.gram(), rng);
      return from_matrix(f.space(), outer(a, w, k));
    }
    case FormLine::Hyperdet: {
      auto u = nonzero_vector(2, k, rng);
      auto v = nonzero_vector(2, k, rng);
      auto w = nonzero_vector(2, k, rng);
      std::vector<FieldElement> out;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int l = 0; l < 2; ++l) out.push_back(u[i] * v[j] * w[l]);
      return c * RepVector(f.space(), out);
    }
  }
  throw std::logic_error("unhandled form");
}

}  // namespace preserver
