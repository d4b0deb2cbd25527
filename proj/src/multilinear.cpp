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

#include "preserver/multilinear.hpp"

#include <stdexcept>

#include "preserver/wedge.hpp"

namespace preserver {

BilinearGram::BilinearGram(Matrix g, Symmetry s) : gram(std::move(g)), symmetry(s) {
  if (!gram.is_square()) throw std::invalid_argument("Gram matrix must be square");
  const bool ok = s == Symmetry::Symmetric ? gram.is_symmetric() : gram.is_alternating();
  if (!ok) throw std::invalid_argument("Gram matrix does not match its symmetry tag");
}

std::size_t rank(const RepVector& v) {
  if (!v.space.is_matrix()) throw std::invalid_argument("rank needs a matrix, got " + v.space.describe());
  return rank(to_matrix(v));
}

std::size_t rank(const BilinearGram& b) { return rank(b.gram); }

std::size_t radical_dimension(const BilinearGram& b) { return b.gram.rows() - rank(b.gram); }

FieldElement polarize4(const InvariantForm& f, const RepVector& x1, const RepVector& x2, const RepVector& x3,
                       const RepVector& x4) {
  if (f.degree() != 4) throw std::invalid_argument("polarize4 needs a quartic form, got " + f.descriptor());
  const RepVector* xs[4] = {&x1, &x2, &x3, &x4};
  for (const RepVector* x : xs)
    if (!(x->space == f.space())) throw std::invalid_argument("polarize4: vector outside the form's space");
  const Field& k = f.field();
  FieldElement sum = k.zero();
  std::vector<FieldElement> c(x1.coords.size());
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::fill(c.begin(), c.end(), k.zero());
    int bits = 0;
    for (int i = 0; i < 4; ++i) {
      if (!(mask & (1u << i))) continue;
      ++bits;
      for (std::size_t j = 0; j < c.size(); ++j) c[j] += xs[i]->coords[j];
    }
    FieldElement val = f.eval_coords<FieldElement>(c);
    if ((4 - bits) % 2) sum -= val;
    else sum += val;
  }
  return sum / k.from_int(24);
}

BilinearGram bilinear_bx(const InvariantForm& f, const RepVector& x) {
  const auto basis = space_basis(f.space(), f.field());
  const std::size_t n = basis.size();
  Matrix g(n, n, f.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = polarize4(f, x, x, basis[i], basis[j]);
      g(j, i) = g(i, j);
    }
  return BilinearGram(std::move(g), Symmetry::Symmetric);
}

namespace {

Matrix j2(const Field& f) { return Matrix::from_ints(f, {{0, 1}, {-1, 0}}); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace

SymplecticPairing symplectic_pairing(const Space& s, const Field& f, const Matrix* S) {
  switch (s.kind) {
    case SpaceKind::Cubic: {
      Matrix g(4, 4, f);
      const FieldElement third = f.one() / f.from_int(3);
      g(0, 3) = f.one();
      g(1, 2) = -third;
      g(2, 1) = third;
      g(3, 0) = -f.one();
      return {s, g};
    }
    case SpaceKind::Wedge:
    case SpaceKind::Wedge3Sp: {
      if (s.d != 3 || s.n != 6) break;
      return {s, wedge::hodge_star(3, 6, f).transpose()};
    }
    case SpaceKind::Rect: {
      if (s.m != 2) break;
      if (!S || S->rows() != s.n || !S->is_symmetric()) {
        throw std::invalid_argument("pairing on k^2 (x) k^n needs a symmetric n x n S");
      }
      return {s, kron(j2(f), *S)};
    }
    case SpaceKind::TriTensor:
      return {s, kron(j2(f), kron(j2(f), j2(f)))};
    default:
      break;
  }
  throw std::invalid_argument("no symplectic pairing registered for " + s.describe());
}

std::optional<SymplecticPairing> registered_pairing(const InvariantForm& f) {
  switch (f.line()) {
    case FormLine::CubicDisc:
    case FormLine::Wedge36:
    case FormLine::Sp6:
    case FormLine::Hyperdet: return symplectic_pairing(f.space(), f.field());
    case FormLine::Mat2n: return symplectic_pairing(f.space(), f.field(), &f.gram());
    default: return std::nullopt;
  }
}

FieldElement symplectic_pair(const Space& s, const RepVector& x, const RepVector& y, const Matrix* S) {
  if (!(x.space == s) || !(y.space == s)) throw std::invalid_argument("symplectic_pair: vector outside the space");
  if (s == Space::alt(4)) {
    const auto& a = x.coords;
    const auto& b = y.coords;
    return a[0] * b[5] + a[5] * b[0] - a[1] * b[4] - a[4] * b[1] + a[2] * b[3] + a[3] * b[2];
  }
  const SymplecticPairing p = symplectic_pairing(s, x.field(), S);
  const auto gy = p.gram.apply(y.coords);
  FieldElement sum = x.field().zero();
  for (std::size_t i = 0; i < gy.size(); ++i) sum += x.coords[i] * gy[i];
  return sum;
}

RepVector trilinear_t(const InvariantForm& f, const RepVector& x1, const RepVector& x2, const RepVector& x3) {
  const auto pairing = registered_pairing(f);
  if (!pairing) throw std::invalid_argument("no symplectic pairing registered for " + f.descriptor());
  const auto basis = space_basis(f.space(), f.field());
  const std::size_t n = basis.size();
  // Solve sum_i alpha_i <B_i, B_k> = f(x1, x2, x3, B_k) for all k.
  Matrix g(n, n, f.field());
  std::vector<FieldElement> rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto gk = pairing->gram.apply(basis[k].coords);
    for (std::size_t i = 0; i < n; ++i) {
      FieldElement s = f.field().zero();
      for (std::size_t c = 0; c < gk.size(); ++c) s += basis[i].coords[c] * gk[c];
      g(k, i) = s;
    }
    rhs[k] = polarize4(f, x1, x2, x3, basis[k]);
  }
  auto alpha = solve(g, rhs);
  if (!alpha || rank(g) != n) throw std::logic_error("symplectic pairing is degenerate on " + f.space().describe());
  RepVector t = RepVector::zero(f.space(), f.field());
  for (std::size_t i = 0; i < n; ++i) t += (*alpha)[i] * basis[i];
  return t;
}

std::size_t wedge_annihilator_dim(const RepVector& v) {
  if (v.space.kind != SpaceKind::Wedge && v.space.kind != SpaceKind::Wedge3Sp) {
    throw std::invalid_argument("annihilator needs a wedge vector");
  }
  const std::size_t n = v.space.n;
  if (v.space.d == n) return v.is_zero() ? n : 0;
  return n - rank(wedge::left_wedge_map(v.coords, v.space.d, n));
}

RepVector sp6_contract(const RepVector& v, const Matrix& b) {
  if ((v.space.kind != SpaceKind::Wedge && v.space.kind != SpaceKind::Wedge3Sp) || v.space.d != 3 || v.space.n != 6) {
    throw std::invalid_argument("contraction needs a vector in wedge^3 k^6");
  }
  if (b.rows() != 6 || !b.is_alternating() || rank(b) != 6) throw std::invalid_argument("degenerate symplectic form");
  return RepVector(Space::vector(6), wedge::contraction(b, 3).apply(v.coords));
}

}  // namespace preserver
