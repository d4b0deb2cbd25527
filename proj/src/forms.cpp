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

#include "preserver/forms.hpp"

#include <bit>
#include <charconv>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "preserver/wedge.hpp"

namespace preserver {

namespace {

template <class R>
R scaled(const R& x, std::int64_t k) {
  return x * field_of(x).from_int(k);
}

std::size_t parse_size(std::string_view text, std::string_view whole) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw std::invalid_argument("bad form descriptor: " + std::string(whole));
  }
  return v;
}

template <class R>
R trace_k_squared(std::span<const R> v) {
  std::vector<R> k(36, zero_like(v[0]));
  for (const auto& t : wedge::k_operator_terms()) {
    if (is_zero(v[t.a]) || is_zero(v[t.b])) continue;
    R p = v[t.a] * v[t.b];
    if (t.sign > 0) k[t.row * 6 + t.col] += p;
    else k[t.row * 6 + t.col] -= p;
  }
  R tr = zero_like(v[0]);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      if (is_zero(k[i * 6 + j]) || is_zero(k[j * 6 + i])) continue;
      tr += k[i * 6 + j] * k[j * 6 + i];
    }
  return tr;
}

template <class R>
R pf_rec(std::span<const R> a, std::size_t n, std::uint32_t mask, std::unordered_map<std::uint32_t, R>& memo) {
  if (mask == 0) return one_like(a[0]);
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  const std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
  const std::uint32_t rest = mask & ~(1u << i);
  R sum = zero_like(a[0]);
  int sign = 1;
  for (std::size_t j = i + 1; j < n; ++j) {
    if (!(rest & (1u << j))) continue;
    const R& aij = a[i * n + j];
    if (!is_zero(aij)) {
      R term = aij * pf_rec(a, n, rest & ~(1u << j), memo);
      if (sign > 0) sum += term;
      else sum -= term;
    }
    sign = -sign;
  }
  memo.emplace(mask, sum);
  return sum;
}

}  // namespace

template <class R>
R det_generic(std::span<const R> a, std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty determinant");
  if (n > 20) throw std::invalid_argument("determinant too large for expansion");
  // dp[mask]: signed sum over injections of the first popcount(mask) rows into mask.
  std::vector<R> dp(std::size_t{1} << n, zero_like(a[0]));
  std::vector<bool> live(dp.size(), false);
  dp[0] = one_like(a[0]);
  live[0] = true;
  for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
    if (!live[mask] || is_zero(dp[mask])) continue;
    const std::size_t r = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) continue;
      const R& arj = a[r * n + j];
      if (is_zero(arj)) continue;
      const int above = std::popcount(mask >> j);
      R term = dp[mask] * arj;
      const std::uint32_t next = mask | (1u << j);
      if (above % 2) dp[next] -= term;
      else dp[next] += term;
      live[next] = true;
    }
  }
  return dp.back();
}

template <class R>
R pfaffian_generic(std::span<const R> a, std::size_t n) {
  if (n % 2) throw std::invalid_argument("Pfaffian needs even n");
  if (n > 30) throw std::invalid_argument("Pfaffian too large for expansion");
  std::unordered_map<std::uint32_t, R> memo;
  return pf_rec(a, n, static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1), memo);
}

template FieldElement det_generic<FieldElement>(std::span<const FieldElement>, std::size_t);
template Polynomial det_generic<Polynomial>(std::span<const Polynomial>, std::size_t);
template FieldElement pfaffian_generic<FieldElement>(std::span<const FieldElement>, std::size_t);
template Polynomial pfaffian_generic<Polynomial>(std::span<const Polynomial>, std::size_t);

Matrix split_form(std::size_t n, const Field& f) {
  Matrix s(n, n, f);
  for (std::size_t i = 0; i < n; ++i) s(i, n - 1 - i) = f.one();
  return s;
}

InvariantForm::InvariantForm(FormLine line, std::size_t n, Field f, Space s, Matrix gram)
    : line_(line), n_(n), field_(f), space_(s), s_(std::move(gram)) {}

InvariantForm InvariantForm::symm_det(std::size_t n, const Field& f) {
  if (n < 2) throw std::invalid_argument("symm-det needs n >= 2");
  return {FormLine::SymmDet, n, f, Space::symm(n), Matrix()};
}

InvariantForm InvariantForm::skew_pf(std::size_t n, const Field& f) {
  if (n < 4 || n % 2) throw std::invalid_argument("skew-pf needs even n >= 4 (odd n has no Pfaffian)");
  return {FormLine::SkewPf, n, f, Space::alt(n), Matrix()};
}

InvariantForm InvariantForm::square_det(std::size_t n, const Field& f) {
  if (n < 1) throw std::invalid_argument("square-det needs n >= 1");
  return {FormLine::SquareDet, n, f, Space::square(n), Matrix()};
}

static void check_gram(const Matrix& s) {
  if (!s.is_square() || !s.is_symmetric() || rank(s) != s.rows()) {
    throw std::invalid_argument("S must be symmetric and invertible");
  }
}

InvariantForm InvariantForm::quadric(const Matrix& s) {
  check_gram(s);
  return {FormLine::Quadric, s.rows(), s.field(), Space::vector(s.rows()), s};
}

InvariantForm InvariantForm::cubic_disc(const Field& f) {
  return {FormLine::CubicDisc, 2, f, Space::cubic(), Matrix()};
}

InvariantForm InvariantForm::wedge36(const Field& f) {
  return {FormLine::Wedge36, 6, f, Space::wedge(3, 6), Matrix()};
}

InvariantForm InvariantForm::sp6(const Field& f) {
  return {FormLine::Sp6, 6, f, Space::wedge3_sp(), standard_symplectic(6, f)};
}

InvariantForm InvariantForm::mat2n(const Matrix& s) {
  check_gram(s);
  if (s.rows() < 4) throw std::invalid_argument("mat2n needs n >= 4");
  return {FormLine::Mat2n, s.rows(), s.field(), Space::rect(2, s.rows()), s};
}

InvariantForm InvariantForm::hyperdet(const Field& f) {
  return {FormLine::Hyperdet, 2, f, Space::tritensor(), Matrix()};
}

InvariantForm InvariantForm::parse(std::string_view d, const Field& f) {
  const auto colon = d.find(':');
  const std::string_view head = d.substr(0, colon);
  auto arg = [&]() {
    if (colon == std::string_view::npos) throw std::invalid_argument("form needs a size: " + std::string(d));
    return parse_size(d.substr(colon + 1), d);
  };
  auto no_arg = [&]() {
    if (colon != std::string_view::npos) throw std::invalid_argument("form takes no size: " + std::string(d));
  };
  if (head == "symm-det") return symm_det(arg(), f);
  if (head == "skew-pf") return skew_pf(arg(), f);
  if (head == "square-det") return square_det(arg(), f);
  if (head == "quadric") return quadric(split_form(arg(), f));
  if (head == "mat2n") return mat2n(split_form(arg(), f));
  if (head == "cubic-disc") return no_arg(), cubic_disc(f);
  if (head == "wedge36") return no_arg(), wedge36(f);
  if (head == "sp6") return no_arg(), sp6(f);
  if (head == "hyperdet") return no_arg(), hyperdet(f);
  throw std::invalid_argument("unknown form: " + std::string(d));
}

int InvariantForm::degree() const {
  switch (line_) {
    case FormLine::SymmDet:
    case FormLine::SquareDet: return static_cast<int>(n_);
    case FormLine::SkewPf: return static_cast<int>(n_ / 2);
    case FormLine::Quadric: return 2;
    default: return 4;
  }
}

int InvariantForm::table_line() const {
  switch (line_) {
    case FormLine::SymmDet: return 1;
    case FormLine::SkewPf: return 2;
    case FormLine::SquareDet: return 4;
    case FormLine::Quadric: return 5;
    case FormLine::CubicDisc: return 6;
    case FormLine::Wedge36: return 7;
    case FormLine::Sp6: return 8;
    case FormLine::Mat2n:
    case FormLine::Hyperdet: return 11;
  }
  return 0;
}

std::string InvariantForm::descriptor() const {
  switch (line_) {
    case FormLine::SymmDet: return "symm-det:" + std::to_string(n_);
    case FormLine::SkewPf: return "skew-pf:" + std::to_string(n_);
    case FormLine::SquareDet: return "square-det:" + std::to_string(n_);
    case FormLine::Quadric: return "quadric:" + std::to_string(n_);
    case FormLine::CubicDisc: return "cubic-disc";
    case FormLine::Wedge36: return "wedge36";
    case FormLine::Sp6: return "sp6";
    case FormLine::Mat2n: return "mat2n:" + std::to_string(n_);
    case FormLine::Hyperdet: return "hyperdet";
  }
  return "?";
}

template <class R>
R InvariantForm::eval_coords(std::span<const R> c) const {
  if (c.size() != space_.coord_count()) throw std::invalid_argument("vector does not lie in " + space_.describe());
  switch (line_) {
    case FormLine::SymmDet:
    case FormLine::SquareDet: {
      auto m = full_matrix_entries<R>(space_, c);
      if constexpr (std::is_same_v<R, FieldElement>) {
        if (n_ > 6) {
          Matrix mm(n_, n_, field_);
          for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) mm(i, j) = m[i * n_ + j];
          return determinant(mm);
        }
      }
      return det_generic<R>(m, n_);
    }
    case FormLine::SkewPf: {
      auto m = full_matrix_entries<R>(space_, c);
      return pfaffian_generic<R>(m, n_);
    }
    case FormLine::Quadric: {
      R sum = zero_like(c[0]);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          if (!s_(i, j).is_zero()) sum += c[i] * c[j] * s_(i, j);
      return sum;
    }
    case FormLine::CubicDisc: {
      const R &a0 = c[0], &a1 = c[1], &a2 = c[2], &a3 = c[3];
      return a1 * a1 * a2 * a2 + scaled(a0 * a1 * a2 * a3, 18) - scaled(a0 * a2 * a2 * a2, 4) -
             scaled(a1 * a1 * a1 * a3, 4) - scaled(a0 * a0 * a3 * a3, 27);
    }
    case FormLine::Wedge36:
    case FormLine::Sp6: {
      return trace_k_squared<R>(c) * wedge36_constant(field_);
    }
    case FormLine::Mat2n: {
      R m[2][2] = {{zero_like(c[0]), zero_like(c[0])}, {zero_like(c[0]), zero_like(c[0])}};
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = a; b < 2; ++b)
          for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
              if (!s_(i, j).is_zero()) m[a][b] += c[a * n_ + i] * c[b * n_ + j] * s_(i, j);
      return m[0][0] * m[1][1] - m[0][1] * m[0][1];
    }
    case FormLine::Hyperdet: {
      const R &a000 = c[0], &a001 = c[1], &a010 = c[2], &a011 = c[3];
      const R &a100 = c[4], &a101 = c[5], &a110 = c[6], &a111 = c[7];
      R sq = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
             a100 * a100 * a011 * a011;
      R mid = a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111 +
              a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101;
      R hi = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;
      return sq - scaled(mid, 2) + scaled(hi, 4);
    }
  }
  throw std::logic_error("unhandled form");
}

template FieldElement InvariantForm::eval_coords<FieldElement>(std::span<const FieldElement>) const;
template Polynomial InvariantForm::eval_coords<Polynomial>(std::span<const Polynomial>) const;

FieldElement InvariantForm::eval(const RepVector& v) const {
  if (!(v.space == space_)) {
    throw std::invalid_argument("vector in " + v.space.describe() + " does not lie in " + space_.describe());
  }
  if (line_ == FormLine::Sp6) return quartic_sp6(v, s_);
  return eval_coords<FieldElement>(v.coords);
}

FieldElement pfaffian(const RepVector& v) {
  if (v.space.kind != SpaceKind::Alt) throw std::invalid_argument("Pfaffian needs an alternating matrix");
  return pfaffian(to_matrix(v));
}

FieldElement pfaffian(const Matrix& m) {
  if (!m.is_alternating()) throw std::invalid_argument("Pfaffian needs an alternating matrix");
  if (m.rows() % 2) throw std::invalid_argument("Pfaffian needs even n (odd n)");
  return pfaffian_generic<FieldElement>(m.data(), m.rows());
}

const FieldElement& wedge36_constant(const Field& f) {
  static std::once_flag once;
  static mpq_class c0;
  std::call_once(once, [] {
    // x = e1^e2, y = e3^e4 in wedge^2 k^4: <x,y> = 1 and Pf(x) = Pf(y) = 0.
    const Field q = Field::rationals();
    RepVector x = RepVector::unit(Space::alt(4), q, 0);
    RepVector y = RepVector::unit(Space::alt(4), q, 5);
    RepVector w = w_embed(x, y);
    const FieldElement tr = trace_k_squared<FieldElement>(w.coords);
    c0 = (q.one() / tr).rational();
  });
  static std::mutex mu;
  static std::vector<std::pair<Field, FieldElement>> cache;
  std::lock_guard lock(mu);
  for (const auto& [cf, v] : cache)
    if (cf == f) return v;
  cache.emplace_back(f, f.from_rational(c0));
  return cache.back().second;
}

RepVector w_embed(const RepVector& x, const RepVector& y) {
  if (x.space != Space::alt(4) || y.space != Space::alt(4)) {
    throw std::invalid_argument("w expects two alternating 4 x 4 matrices");
  }
  const Field f = x.field();
  RepVector out = RepVector::zero(Space::wedge(3, 6), f);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j, ++idx) {
      const std::size_t a[3] = {0, i + 2, j + 2};
      const std::size_t b[3] = {1, i + 2, j + 2};
      out.coords[wedge::subset_rank(a)] += x.coords[idx];
      out.coords[wedge::subset_rank(b)] += y.coords[idx];
    }
  return out;
}

FieldElement quartic_wedge36(const RepVector& v) {
  if (v.space.kind != SpaceKind::Wedge && v.space.kind != SpaceKind::Wedge3Sp) {
    throw std::invalid_argument("quartic needs a vector in wedge^3 k^6");
  }
  if (v.space.d != 3 || v.space.n != 6) throw std::invalid_argument("quartic needs a vector in wedge^3 k^6");
  return trace_k_squared<FieldElement>(v.coords) * wedge36_constant(v.field());
}

FieldElement quartic_sp6(const RepVector& v, const Matrix& b) {
  if (rank(b) != 6 || !b.is_alternating()) throw std::invalid_argument("degenerate symplectic form");
  const auto c = wedge::contraction(b, 3).apply(v.coords);
  for (const auto& x : c)
    if (!x.is_zero()) throw std::invalid_argument("vector does not lie in wedge^3_0 k^6 (nonzero contraction)");
  return quartic_wedge36(v);
}

FieldElement hyperdet(const RepVector& v) { return InvariantForm::hyperdet(v.field()).eval(v); }

FieldElement cubic_discriminant(const RepVector& v) { return InvariantForm::cubic_disc(v.field()).eval(v); }

}  // namespace preserver
