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

#include "preserver/preservers.hpp"

#include <algorithm>
#include <stdexcept>

#include "preserver/groups.hpp"
#include "preserver/wedge.hpp"

namespace preserver {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_invertible(const Matrix& m, std::size_t n, const std::string& name) {
  require(m.rows() == n && m.cols() == n, name + " must be " + std::to_string(n) + " x " + std::to_string(n));
  require(!determinant(m).is_zero(), name + " must be invertible");
}

Matrix column_matrix(const Space& s, const Field& k, const auto& image_of_unit) {
  const std::size_t n = s.coord_count();
  Matrix m(n, n, k);
  for (std::size_t j = 0; j < n; ++j) {
    RepVector img = image_of_unit(RepVector::unit(s, k, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = img.coords[i];
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Matrix star4_matrix(const Field& k) {
  return Matrix::from_ints(k, {{1, 0, 0, 0, 0, 0},
                               {0, -1, 0, 0, 0, 0},
                               {0, 0, 0, -1, 0, 0},
                               {0, 0, -1, 0, 0, 0},
                               {0, 0, 0, 0, -1, 0},
                               {0, 0, 0, 0, 0, 1}});
}

Matrix perm3_matrix(const Perm3& sigma, const Field& k) {
  Matrix m(8, 8, k);
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const std::size_t b[3] = {idx >> 2 & 1, idx >> 1 & 1, idx & 1};
    std::size_t w[3];
    for (int i = 0; i < 3; ++i) w[sigma[i]] = b[i];
    m(w[0] * 4 + w[1] * 2 + w[2], idx) = k.one();
  }
  return m;
}

bool is_perm3(const Perm3& s) {
  bool seen[3] = {false, false, false};
  for (int x : s) {
    if (x < 0 || x > 2 || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm3 compose_perm(const Perm3& a, const Perm3& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }

Perm3 invert_perm(const Perm3& a) {
  Perm3 out{};
  for (int i = 0; i < 3; ++i) out[a[i]] = i;
  return out;
}

// Coefficients of (al x + be y)^(3-k) (ga x + de y)^k in the basis x^3, x^2 y, x y^2, y^3.
std::vector<FieldElement> cubic_column(const Matrix& g, std::size_t k) {
  const Field& f = g.field();
  std::vector<FieldElement> poly{f.one()};
  auto times = [&](const FieldElement& a, const FieldElement& b) {
    std::vector<FieldElement> out(poly.size() + 1, f.zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      out[i] += poly[i] * a;
      out[i + 1] += poly[i] * b;
    }
    poly = std::move(out);
  };
  for (std::size_t i = 0; i < 3 - k; ++i) times(g(0, 0), g(0, 1));
  for (std::size_t i = 0; i < k; ++i) times(g(1, 0), g(1, 1));
  return poly;
}

Matrix build_matrix(const Space& s, const Field& k, const FamilyData& data) {
  return std::visit(
      overloaded{
          [&](const Congruence& c) {
            require(s.kind == SpaceKind::Symm || s.kind == SpaceKind::Alt, "congruence acts on symmetric/alternating matrices");
            require(!c.r.is_zero(), "r must be nonzero");
            require_invertible(c.p, s.n, "P");
            require(!c.hodge || s == Space::alt(4), "the star composite needs alternating 4 x 4 matrices");
            const Matrix pt = c.p.transpose();
            Matrix m = column_matrix(s, c.r.field(), [&](const RepVector& e) {
              return from_matrix(s, c.p * to_matrix(e) * pt * c.r);
            });
            return c.hodge ? m * star4_matrix(c.r.field()) : m;
          },
          [&](const Sandwich& w) {
            require(s.kind == SpaceKind::Square || s.kind == SpaceKind::Rect, "sandwich acts on square/rectangular matrices");
            require_invertible(w.a, s.matrix_rows(), "A");
            require_invertible(w.b, s.matrix_cols(), "B");
            return column_matrix(s, w.a.field(), [&](const RepVector& e) { return from_matrix(s, w.a * to_matrix(e) * w.b); });
          },
          [&](const TransposeSandwich& w) {
            require(s.kind == SpaceKind::Square, "transpose sandwich acts on square matrices");
            require_invertible(w.a, s.n, "A");
            require_invertible(w.b, s.n, "B");
            return column_matrix(s, w.a.field(),
                                 [&](const RepVector& e) { return from_matrix(s, w.a * to_matrix(e).transpose() * w.b); });
          },
          [&](const HodgeStar4&) {
            require(s == Space::alt(4), "the 4 x 4 star acts on alternating 4 x 4 matrices");
            return star4_matrix(k);
          },
          [&](const HodgeStar20&) {
            require(s == Space::wedge(3, 6), "the star acts on wedge^3 k^6");
            return wedge::hodge_star(3, 6, k);
          },
          [&](const CubicComposition& c) {
            require(s.kind == SpaceKind::Cubic, "composition acts on binary cubics");
            require(!c.c.is_zero(), "c must be nonzero");
            require_invertible(c.g, 2, "g");
            Matrix m(4, 4, c.c.field());
            for (std::size_t k = 0; k < 4; ++k) {
              auto col = cubic_column(c.g, k);
              for (std::size_t i = 0; i < 4; ++i) m(i, k) = c.c * col[i];
            }
            return m;
          },
          [&](const WedgePush& w) {
            require(s.kind == SpaceKind::Wedge, "wedge push acts on wedge^d k^n");
            require(!w.c.is_zero(), "c must be nonzero");
            require_invertible(w.g, s.n, "g");
            require(!w.hodge || 2 * s.d == s.n, "the star composite needs n = 2d");
            Matrix m = wedge::exterior_power(w.g, s.d) * w.c;
            return w.hodge ? m * wedge::hodge_star(s.d, s.n, w.c.field()) : m;
          },
          [&](const GSp6Elem& e) {
            require(s.kind == SpaceKind::Wedge3Sp, "GSp6 elements act on wedge^3_0 k^6");
            require(!e.c.is_zero() && !e.mu.is_zero(), "c and mu must be nonzero");
            require_invertible(e.g, 6, "g");
            const Matrix b = standard_symplectic(6, e.g.field());
            require(e.g.transpose() * b * e.g == b * e.mu, "g is not a symplectic similitude with factor mu");
            return wedge::exterior_power(e.g, 3) * e.c;
          },
          [&](const TriplePush& t) {
            require(s.kind == SpaceKind::TriTensor, "triple push acts on k^2 (x) k^2 (x) k^2");
            require_invertible(t.g1, 2, "g1");
            require_invertible(t.g2, 2, "g2");
            require_invertible(t.g3, 2, "g3");
            require(is_perm3(t.sigma), "sigma must be a permutation of {0,1,2}");
            return kron(t.g1, kron(t.g2, t.g3)) * perm3_matrix(t.sigma, t.g1.field());
          },
          [&](const FactorPermutation& p) {
            require(s.kind == SpaceKind::TriTensor, "factor permutations act on k^2 (x) k^2 (x) k^2");
            require(is_perm3(p.sigma), "sigma must be a permutation of {0,1,2}");
            return perm3_matrix(p.sigma, k);
          },
          [&](const GOPair& o) {
            require(s.kind == SpaceKind::Rect && s.m == 2, "GO pairs act on 2 x n matrices");
            require(!o.mu.is_zero(), "mu must be nonzero");
            require_invertible(o.g1, 2, "g1");
            require_invertible(o.g2, s.n, "g2");
            require(o.g2.transpose() * o.s * o.g2 == o.s * o.mu, "g2 is not a similitude of S with factor mu");
            const Matrix g2t = o.g2.transpose();
            return column_matrix(s, o.g1.field(), [&](const RepVector& e) { return from_matrix(s, o.g1 * to_matrix(e) * g2t); });
          },
          [&](const GenericMap& g) {
            require(g.m.rows() == s.coord_count() && g.m.cols() == s.coord_count(), "generic map has the wrong size");
            require(rank(g.m) == s.coord_count(), "generic map must be invertible");
            return g.m;
          }},
      data);
}

}  // namespace

PreserverElement::PreserverElement(Space space, const Field& field, FamilyData data)
    : space_(space), data_(std::move(data)), coords_(build_matrix(space_, field, data_)) {
  require(coords_.field() == field, "family parameters live over a different field");
}

std::string PreserverElement::family() const {
  return std::visit(overloaded{[](const Congruence& c) { return std::string(c.hodge ? "congruence-star" : "congruence"); },
                               [](const Sandwich&) { return std::string("sandwich"); },
                               [](const TransposeSandwich&) { return std::string("transpose-sandwich"); },
                               [](const HodgeStar4&) { return std::string("hodge-star4"); },
                               [](const HodgeStar20&) { return std::string("hodge-star20"); },
                               [](const CubicComposition&) { return std::string("cubic-composition"); },
                               [](const WedgePush& w) { return std::string(w.hodge ? "wedge-push-star" : "wedge-push"); },
                               [](const GSp6Elem&) { return std::string("gsp6"); },
                               [](const TriplePush&) { return std::string("triple-push"); },
                               [](const FactorPermutation&) { return std::string("factor-permutation"); },
                               [](const GOPair&) { return std::string("go-pair"); },
                               [](const GenericMap&) { return std::string("generic"); }},
                    data_);
}

RepVector apply(const PreserverElement& t, const RepVector& v) {
  if (!(v.space == t.space())) {
    throw std::invalid_argument("vector in " + v.space.describe() + " but map acts on " + t.space().describe());
  }
  return RepVector(v.space, t.coordinate_matrix().apply(v.coords));
}

namespace {

TriplePush as_triple(const PreserverElement& t) {
  const Field& k = t.field();
  if (const auto* p = std::get_if<TriplePush>(&t.data())) return *p;
  const auto& f = std::get<FactorPermutation>(t.data());
  const Matrix i2 = Matrix::identity(2, k);
  return {i2, i2, i2, f.sigma};
}

Matrix factor(const TriplePush& t, int i) { return i == 0 ? t.g1 : i == 1 ? t.g2 : t.g3; }

}  // namespace

namespace {

Matrix inverse_transpose(const Matrix& m) { return preserver::inverse(m)->transpose(); }

// E P^-t E with E = antidiag(1, -1, -1, 1): (P Y P^t)* = det(P) Q Y* Q^t for this Q.
Matrix star_conjugate(const Matrix& p) {
  const Matrix e = Matrix::from_ints(p.field(), {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
  return e * inverse_transpose(p) * e;
}

}  // namespace

PreserverElement compose(const PreserverElement& t1, const PreserverElement& t2) {
  if (!(t1.space() == t2.space())) throw std::invalid_argument("cannot compose maps on different spaces");
  const Space& s = t1.space();
  const Field& k = t1.field();
  const auto& d1 = t1.data();
  const auto& d2 = t2.data();
  auto generic = [&] { return PreserverElement(s, k, GenericMap{t1.coordinate_matrix() * t2.coordinate_matrix()}); };

  if (auto* a = std::get_if<Congruence>(&d1)) {
    // ** = 1 on Alt(4).
    if (auto* b = std::get_if<Congruence>(&d2)) {
      if (!a->hodge) return {s, k, Congruence{a->r * b->r, a->p * b->p, b->hodge}};
      return {s, k, Congruence{a->r * b->r * determinant(b->p), a->p * star_conjugate(b->p), !b->hodge}};
    }
    if (std::holds_alternative<HodgeStar4>(d2)) return {s, k, Congruence{a->r, a->p, !a->hodge}};
    return generic();
  }
  if (std::holds_alternative<HodgeStar4>(d1)) {
    if (std::holds_alternative<HodgeStar4>(d2)) return {s, k, Congruence{k.one(), Matrix::identity(4, k), false}};
    if (auto* b = std::get_if<Congruence>(&d2)) {
      return {s, k, Congruence{b->r * determinant(b->p), star_conjugate(b->p), !b->hodge}};
    }
    return generic();
  }
  if (auto* a = std::get_if<Sandwich>(&d1)) {
    if (auto* b = std::get_if<Sandwich>(&d2)) return {s, k, Sandwich{a->a * b->a, b->b * a->b}};
    if (auto* b = std::get_if<TransposeSandwich>(&d2)) return {s, k, TransposeSandwich{a->a * b->a, b->b * a->b}};
    return generic();
  }
  if (auto* a = std::get_if<TransposeSandwich>(&d1)) {
    // A1 (A2 X B2)^t B1 = (A1 B2^t) X^t (A2^t B1).
    if (auto* b = std::get_if<Sandwich>(&d2)) {
      return {s, k, TransposeSandwich{a->a * b->b.transpose(), b->a.transpose() * a->b}};
    }
    if (auto* b = std::get_if<TransposeSandwich>(&d2)) {
      return {s, k, Sandwich{a->a * b->b.transpose(), b->a.transpose() * a->b}};
    }
    return generic();
  }
  if (auto* a = std::get_if<CubicComposition>(&d1)) {
    // c1 (c2 q o g2) o g1 = c1 c2 q o (g2 g1).
    if (auto* b = std::get_if<CubicComposition>(&d2)) return {s, k, CubicComposition{a->c * b->c, b->g * a->g}};
    return generic();
  }
  if (auto* a = std::get_if<WedgePush>(&d1)) {
    // (wedge^3 g w)* = det(g) wedge^3 g^-t (w*) and ** = -1 on wedge^3 k^6.
    if (auto* b = std::get_if<WedgePush>(&d2)) {
      if (!a->hodge) return {s, k, WedgePush{a->c * b->c, a->g * b->g, b->hodge}};
      const FieldElement sign = b->hodge ? -k.one() : k.one();
      return {s, k, WedgePush{sign * a->c * b->c * determinant(b->g), a->g * inverse_transpose(b->g), !b->hodge}};
    }
    if (std::holds_alternative<HodgeStar20>(d2)) {
      if (!a->hodge) return {s, k, WedgePush{a->c, a->g, true}};
      return {s, k, WedgePush{-a->c, a->g, false}};
    }
    return generic();
  }
  if (std::holds_alternative<HodgeStar20>(d1)) {
    if (std::holds_alternative<HodgeStar20>(d2)) return {s, k, WedgePush{-k.one(), Matrix::identity(6, k), false}};
    if (auto* b = std::get_if<WedgePush>(&d2)) {
      const FieldElement sign = b->hodge ? -k.one() : k.one();
      return {s, k, WedgePush{sign * b->c * determinant(b->g), inverse_transpose(b->g), !b->hodge}};
    }
    return generic();
  }
  if (auto* a = std::get_if<GSp6Elem>(&d1)) {
    if (auto* b = std::get_if<GSp6Elem>(&d2)) return {s, k, GSp6Elem{a->c * b->c, a->g * b->g, a->mu * b->mu}};
    return generic();
  }
  const bool tri1 = std::holds_alternative<TriplePush>(d1) || std::holds_alternative<FactorPermutation>(d1);
  const bool tri2 = std::holds_alternative<TriplePush>(d2) || std::holds_alternative<FactorPermutation>(d2);
  if (tri1 && tri2) {
    if (std::holds_alternative<FactorPermutation>(d1) && std::holds_alternative<FactorPermutation>(d2)) {
      return {s, k, FactorPermutation{compose_perm(std::get<FactorPermutation>(d1).sigma, std::get<FactorPermutation>(d2).sigma)}};
    }
    // G1 P1 G2 P2 = (G1 . P1 G2 P1^-1) P1 P2; conjugation moves g2_i to slot sigma1(i).
    const TriplePush a = as_triple(t1);
    const TriplePush b = as_triple(t2);
    Matrix g[3];
    for (int i = 0; i < 3; ++i) g[a.sigma[i]] = factor(b, i);
    for (int j = 0; j < 3; ++j) g[j] = factor(a, j) * g[j];
    return {s, k, TriplePush{g[0], g[1], g[2], compose_perm(a.sigma, b.sigma)}};
  }
  if (auto* a = std::get_if<GOPair>(&d1)) {
    if (auto* b = std::get_if<GOPair>(&d2); b && a->s == b->s) {
      return {s, k, GOPair{a->g1 * b->g1, a->g2 * b->g2, a->mu * b->mu, a->s}};
    }
    return generic();
  }
  return generic();
}

PreserverElement inverse(const PreserverElement& t) {
  const Space& s = t.space();
  const Field& k = t.field();
  auto inv = [](const Matrix& m) { return *preserver::inverse(m); };
  return std::visit(
      overloaded{
          [&](const Congruence& c) -> PreserverElement {
            if (c.hodge) {
              return {s, k, Congruence{(c.r * determinant(c.p)).inverse(), star_conjugate(inv(c.p)), true}};
            }
            return {s, k, Congruence{c.r.inverse(), inv(c.p), false}};
          },
          [&](const Sandwich& w) -> PreserverElement { return {s, k, Sandwich{inv(w.a), inv(w.b)}}; },
          [&](const TransposeSandwich& w) -> PreserverElement {
            // Y = A X^t B  =>  X = B^-t Y^t A^-t.
            return {s, k, TransposeSandwich{inv(w.b).transpose(), inv(w.a).transpose()}};
          },
          [&](const HodgeStar4&) -> PreserverElement { return t; },
          [&](const HodgeStar20&) -> PreserverElement {
            return {s, k, WedgePush{-k.one(), Matrix::identity(6, k), true}};
          },
          [&](const CubicComposition& c) -> PreserverElement {
            return {s, k, CubicComposition{c.c.inverse(), inv(c.g)}};
          },
          [&](const WedgePush& w) -> PreserverElement {
            // Y = c wedge^3 g (v*)  =>  v = -c^-1 det(g)^-1 wedge^3 g^t (Y*).
            if (w.hodge) return {s, k, WedgePush{-(w.c * determinant(w.g)).inverse(), w.g.transpose(), true}};
            return {s, k, WedgePush{w.c.inverse(), inv(w.g), false}};
          },
          [&](const GSp6Elem& e) -> PreserverElement {
            return {s, k, GSp6Elem{e.c.inverse(), inv(e.g), e.mu.inverse()}};
          },
          [&](const TriplePush& p) -> PreserverElement {
            // (G P)^-1 = P^-1 G^-1 = (P^-1 G^-1 P) P^-1; slot j of G^-1 moves to sigma^-1(j).
            const Perm3 si = invert_perm(p.sigma);
            Matrix g[3];
            for (int j = 0; j < 3; ++j) g[si[j]] = inv(factor(p, j));
            return {s, k, TriplePush{g[0], g[1], g[2], si}};
          },
          [&](const FactorPermutation& p) -> PreserverElement {
            return {s, k, FactorPermutation{invert_perm(p.sigma)}};
          },
          [&](const GOPair& o) -> PreserverElement {
            return {s, k, GOPair{inv(o.g1), inv(o.g2), o.mu.inverse(), o.s}};
          },
          [&](const GenericMap& g) -> PreserverElement { return {s, k, GenericMap{inv(g.m)}}; }},
      t.data());
}

FieldElement scaling_factor(const PreserverElement& t, const InvariantForm& f) {
  if (!(t.space() == f.space())) throw std::invalid_argument("map and form live on different spaces");
  const Field& k = f.field();
  const auto n = static_cast<std::int64_t>(f.n());
  auto mismatch = [&]() -> FieldElement {
    throw std::invalid_argument("family " + t.family() + " is not attached to " + f.descriptor());
  };
  return std::visit(
      overloaded{
          [&](const Congruence& c) {
            if (f.line() == FormLine::SymmDet && !c.hodge) return c.r.pow(n) * determinant(c.p).pow(2);
            if (f.line() == FormLine::SkewPf) return c.r.pow(n / 2) * determinant(c.p);
            return mismatch();
          },
          [&](const Sandwich& w) {
            if (f.line() != FormLine::SquareDet) return mismatch();
            return determinant(w.a) * determinant(w.b);
          },
          [&](const TransposeSandwich& w) {
            if (f.line() != FormLine::SquareDet) return mismatch();
            return determinant(w.a) * determinant(w.b);
          },
          [&](const HodgeStar4&) { return f.line() == FormLine::SkewPf ? k.one() : mismatch(); },
          [&](const HodgeStar20&) { return f.line() == FormLine::Wedge36 ? k.one() : mismatch(); },
          [&](const CubicComposition& c) {
            if (f.line() != FormLine::CubicDisc) return mismatch();
            return c.c.pow(4) * determinant(c.g).pow(6);
          },
          [&](const WedgePush& w) {
            if (f.line() != FormLine::Wedge36) return mismatch();
            return w.c.pow(4) * determinant(w.g).pow(2);
          },
          [&](const GSp6Elem& e) {
            if (f.line() != FormLine::Sp6) return mismatch();
            return e.c.pow(4) * determinant(e.g).pow(2);
          },
          [&](const TriplePush& p) {
            if (f.line() != FormLine::Hyperdet) return mismatch();
            return (determinant(p.g1) * determinant(p.g2) * determinant(p.g3)).pow(2);
          },
          [&](const FactorPermutation&) { return f.line() == FormLine::Hyperdet ? k.one() : mismatch(); },
          [&](const GOPair& o) {
            if (f.line() != FormLine::Mat2n || !(o.s == f.gram())) return mismatch();
            return (determinant(o.g1) * o.mu).pow(2);
          },
          [&](const GenericMap&) -> FieldElement {
            throw std::invalid_argument("generic maps have no closed-form scaling character");
          }},
      t.data());
}

bool constraint_satisfied(const PreserverElement& t, const InvariantForm& f) { return scaling_factor(t, f).is_one(); }

std::size_t schwartz_zippel_trials(const InvariantForm& f) {
  const mpq_class set_size =
      f.field().is_rational() ? mpq_class(mpz_class(1) << 32) : mpq_class(mpz_class(std::to_string(f.field().modulus())));
  const mpq_class per_point = mpq_class(f.degree()) / set_size;
  if (per_point >= 1) throw std::invalid_argument("field too small for random identity testing of " + f.descriptor());
  const mpq_class target(mpz_class(1), mpz_class(1) << 60);
  mpq_class bound = 1;
  std::size_t k = 0;
  while (bound > target) {
    bound *= per_point;
    ++k;
  }
  return k;
}

TestPolicy TestPolicy::automatic(const InvariantForm& f, std::uint64_t seed) {
  if (f.space().coord_count() <= static_cast<std::size_t>(Polynomial::kMaxVars)) return symbolic();
  return random_points(schwartz_zippel_trials(f), seed);
}

RepVector schwartz_zippel_point(const Space& s, const Field& k, Rng& rng) {
  constexpr std::int64_t half = std::int64_t{1} << 31;
  auto coefficient = [&] {
    if (k.is_rational()) return field_sample_int(k, -half, half - 1, rng);
    return field_sample_int(k, 0, static_cast<std::int64_t>(k.modulus() - 1), rng);
  };
  if (s.kind != SpaceKind::Wedge3Sp) {
    std::vector<FieldElement> c;
    c.reserve(s.coord_count());
    for (std::size_t i = 0; i < s.coord_count(); ++i) c.push_back(coefficient());
    return RepVector(s, std::move(c));
  }
  static thread_local std::vector<std::pair<Field, std::vector<RepVector>>> cache;
  const std::vector<RepVector>* basis = nullptr;
  for (const auto& [cf, b] : cache)
    if (cf == k) basis = &b;
  if (!basis) {
    cache.emplace_back(k, space_basis(s, k));
    basis = &cache.back().second;
  }
  RepVector v = RepVector::zero(s, k);
  for (const auto& b : *basis) v += coefficient() * b;
  return v;
}

namespace {

mpq_class compound_bound(const InvariantForm& f, std::size_t points) {
  const mpq_class set_size =
      f.field().is_rational() ? mpq_class(mpz_class(1) << 32) : mpq_class(mpz_class(std::to_string(f.field().modulus())));
  mpq_class per = mpq_class(f.degree()) / set_size;
  if (per > 1) per = 1;
  mpq_class out = 1;
  for (std::size_t i = 0; i < points; ++i) out *= per;
  return out;
}

void require_same_space(const PreserverElement& t, const InvariantForm& f) {
  if (!(t.space() == f.space())) {
    throw std::invalid_argument("map acts on " + t.space().describe() + " but the form lives on " + f.space().describe());
  }
}

// f(T x) - c f(x) as a polynomial in the coordinates of x.
Polynomial symbolic_defect(const PreserverElement& t, const InvariantForm& f, const FieldElement& c) {
  const std::size_t n = f.space().coord_count();
  if (n > static_cast<std::size_t>(Polynomial::kMaxVars)) {
    throw std::invalid_argument("symbolic policy rejected for dim > 10 (" + f.space().describe() + ")");
  }
  const Field& k = f.field();
  const int nv = static_cast<int>(n);
  std::vector<Polynomial> x, y;
  for (int i = 0; i < nv; ++i) x.push_back(Polynomial::variable(k, nv, i));
  const Matrix& m = t.coordinate_matrix();
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial yi(k, nv);
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) yi += x[j] * m(i, j);
    y.push_back(std::move(yi));
  }
  return f.eval_coords<Polynomial>(y) - f.eval_coords<Polynomial>(x) * c;
}

// First of up to `limit` random points with f(T v) != c f(v).
std::optional<Counterexample> find_defect(const PreserverElement& t, const InvariantForm& f, const FieldElement& c,
                                          Rng& rng, std::size_t limit, std::size_t* used = nullptr) {
  for (std::size_t i = 0; i < limit; ++i) {
    RepVector v = schwartz_zippel_point(f.space(), f.field(), rng);
    FieldElement lhs = f.eval(apply(t, v));
    FieldElement rhs = f.eval(v) * c;
    if (used) *used = i + 1;
    if (lhs != rhs) return Counterexample{std::move(v), std::move(lhs), std::move(rhs), std::nullopt};
  }
  return std::nullopt;
}

Verdict identity_test(const PreserverElement& t, const InvariantForm& f, const FieldElement& c, const TestPolicy& policy) {
  Verdict out;
  out.policy = policy.name();
  Rng rng(policy.seed);
  if (policy.kind == TestPolicy::Kind::Symbolic) {
    if (symbolic_defect(t, f, c).is_zero()) {
      out.passed = true;
      return out;
    }
    // The polynomial is nonzero, so a witness exists; random points find one quickly.
    out.counterexample = find_defect(t, f, c, rng, 4096);
    return out;
  }
  out.counterexample = find_defect(t, f, c, rng, policy.trials, &out.points);
  out.passed = !out.counterexample;
  if (out.passed) out.error_bound = compound_bound(f, out.points);
  return out;
}

}  // namespace

Verdict preserves_form(const PreserverElement& t, const InvariantForm& f, const TestPolicy& policy) {
  require_same_space(t, f);
  return identity_test(t, f, f.field().one(), policy);
}

Verdict scales_form(const PreserverElement& t, const InvariantForm& f, const TestPolicy& policy) {
  require_same_space(t, f);
  Rng rng(derive_seed(policy.seed, 0x5ca1e));
  // Base point with f(v) != 0 fixes the only candidate scalar.
  for (int tries = 0; tries < 256; ++tries) {
    RepVector v0 = schwartz_zippel_point(f.space(), f.field(), rng);
    const FieldElement fv = f.eval(v0);
    if (fv.is_zero()) continue;
    const FieldElement c = f.eval(apply(t, v0)) / fv;
    Verdict out = identity_test(t, f, c, policy);
    if (out.passed) {
      out.scalar = c;
    } else if (out.counterexample) {
      out.counterexample->second = v0;
    }
    return out;
  }
  Verdict out;
  out.policy = policy.name();
  return out;
}

Verdict preserves_minimals(const PreserverElement& t, const InvariantForm& f, std::size_t trials, std::uint64_t seed) {
  require_same_space(t, f);
  Verdict out;
  out.policy = "sampled-minimals";
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    RepVector m = sample_minimal(f, rng);
    RepVector img = apply(t, m);
    ++out.points;
    if (!minimal_by_rank(f, img).is_minimal) {
      out.counterexample = Counterexample{std::move(m), f.field().zero(), f.field().zero(), std::move(img)};
      return out;
    }
  }
  out.passed = true;
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Congruence: return "congruence";
    case Family::CongruenceStar: return "congruence-star";
    case Family::Sandwich: return "sandwich";
    case Family::TransposeSandwich: return "transpose-sandwich";
    case Family::CubicComposition: return "cubic-composition";
    case Family::WedgePush: return "wedge-push";
    case Family::WedgePushStar: return "wedge-push-star";
    case Family::GSp6: return "gsp6";
    case Family::TriplePush: return "triple-push";
    case Family::GOPair: return "go-pair";
  }
  return "?";
}

std::vector<Family> families_for(const InvariantForm& f) {
  switch (f.line()) {
    case FormLine::SymmDet: return {Family::Congruence};
    case FormLine::SkewPf:
      if (f.n() == 4) return {Family::Congruence, Family::CongruenceStar};
      return {Family::Congruence};
    case FormLine::SquareDet: return {Family::Sandwich, Family::TransposeSandwich};
    case FormLine::Quadric: return {};
    case FormLine::CubicDisc: return {Family::CubicComposition};
    case FormLine::Wedge36: return {Family::WedgePush, Family::WedgePushStar};
    case FormLine::Sp6: return {Family::GSp6};
    case FormLine::Mat2n: return {Family::GOPair};
    case FormLine::Hyperdet: return {Family::TriplePush};
  }
  return {};
}

namespace {

constexpr int kResampleCap = 10000;

// Entry range for random matrices: small over Q, the whole field over F_p.
std::int64_t matrix_height(const Field& k) {
  return k.is_rational() ? 3 : static_cast<std::int64_t>(k.modulus());
}

FieldElement sign(Rng& rng, const Field& k) { return rng() & 1 ? k.one() : -k.one(); }

// s U D with U unimodular and D = diag(+-1): determinant +-s^n.
Matrix scaled_unimodular(std::size_t n, const FieldElement& s, Rng& rng) {
  const Field k = s.field();
  Matrix u = random_unimodular(n, k, rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1)
      for (std::size_t j = 0; j < n; ++j) u(j, i) = -u(j, i);
  }
  return u * s;
}

void scale_row(Matrix& m, std::size_t row, const FieldElement& c) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= c;
}

// Scales row 0 so that det(m) == target.
void force_det(Matrix& m, const FieldElement& target) { scale_row(m, 0, target / determinant(m)); }

// g with g^t S g = mu S for the split S (even n: diag(mu,..,mu,1,..,1)); other
// S or odd n use the scalar similitude lambda I with mu = lambda^2.
std::pair<Matrix, FieldElement> similitude(const Matrix& s, const FieldElement& lambda, bool diagonal, Rng& rng) {
  const std::size_t n = s.rows();
  const Field& k = s.field();
  Matrix d = Matrix::identity(n, k);
  FieldElement mu = lambda * lambda;
  if (diagonal && n % 2 == 0 && s == split_form(n, k)) {
    for (std::size_t i = 0; i < n / 2; ++i) d(i, i) = lambda;
    mu = lambda;
  } else {
    d = d * lambda;
  }
  return {random_orthogonal(s, rng) * d, mu};
}

Matrix symplectic_similitude(const Matrix& b, const FieldElement& mu, Rng& rng) {
  Matrix d = Matrix::identity(6, b.field());
  for (std::size_t i = 0; i < 6; i += 2) d(i, i) = mu;
  return random_symplectic(b, rng) * d;
}

Perm3 random_perm(Rng& rng) {
  Perm3 p{0, 1, 2};
  for (int i = 2; i > 0; --i) std::swap(p[i], p[rng() % (i + 1)]);
  return p;
}

PreserverElement satisfying_rational(Family fam, const InvariantForm& f, Rng& rng) {
  const Field& k = f.field();
  const Space& sp = f.space();
  const std::size_t n = f.n();
  const FieldElement s = field_sample_nonzero(k, 3, rng);
  switch (fam) {
    case Family::Congruence:
    case Family::CongruenceStar: {
      const bool star = fam == Family::CongruenceStar;
      Matrix p = scaled_unimodular(n, s, rng);
      FieldElement r = s.pow(-2);
      if (f.line() == FormLine::SymmDet) {
        if (n % 2 == 0) r *= sign(rng, k);
        return {sp, k, Congruence{r, p, false}};
      }
      r *= sign(rng, k);
      // chi = r^(n/2) det P is now +-1; flip a row if needed.
      if (!(r.pow(static_cast<std::int64_t>(n / 2)) * determinant(p)).is_one()) scale_row(p, 0, -k.one());
      return {sp, k, Congruence{r, p, star}};
    }
    case Family::Sandwich:
    case Family::TransposeSandwich: {
      Matrix a = scaled_unimodular(n, s, rng);
      Matrix b = scaled_unimodular(n, s.inverse(), rng);
      if (!(determinant(a) * determinant(b)).is_one()) scale_row(b, 0, -k.one());
      if (fam == Family::Sandwich) return {sp, k, Sandwich{a, b}};
      return {sp, k, TransposeSandwich{a, b}};
    }
    case Family::CubicComposition: {
      // det g = +-s^2, c = +-s^-3: c^4 det(g)^6 = 1.
      return {sp, k, CubicComposition{sign(rng, k) * s.pow(-3), scaled_unimodular(2, s, rng)}};
    }
    case Family::WedgePush:
    case Family::WedgePushStar: {
      // det g = +-s^6, c = +-s^-3: c^4 det(g)^2 = 1.
      return {sp, k, WedgePush{sign(rng, k) * s.pow(-3), scaled_unimodular(6, s, rng), fam == Family::WedgePushStar}};
    }
    case Family::GSp6: {
      // mu = +-m^2, det g = mu^3, c = +-m^-3.
      const FieldElement mu = sign(rng, k) * s * s;
      return {sp, k, GSp6Elem{sign(rng, k) * s.pow(-3), symplectic_similitude(f.gram(), mu, rng), mu}};
    }
    case Family::TriplePush: {
      const FieldElement s2 = field_sample_nonzero(k, 3, rng);
      Matrix g1 = scaled_unimodular(2, s, rng);
      Matrix g2 = scaled_unimodular(2, s2, rng);
      Matrix g3 = scaled_unimodular(2, (s * s2).inverse(), rng);
      return {sp, k, TriplePush{g1, g2, g3, random_perm(rng)}};
    }
    case Family::GOPair: {
      // Diagonal similitude with lambda = m^2 (mu = m^2) or scalar lambda = m (mu = m^2); det g1 = +-m^-2.
      const bool diagonal = rng() & 1;
      const FieldElement lambda = diagonal && n % 2 == 0 ? s * s : s;
      auto [g2, mu] = similitude(f.gram(), lambda, diagonal, rng);
      Matrix g1 = scaled_unimodular(2, s.inverse(), rng);
      return {sp, k, GOPair{g1, g2, mu, f.gram()}};
    }
  }
  throw std::logic_error("unhandled family");
}

std::optional<PreserverElement> satisfying_prime(Family fam, const InvariantForm& f, Rng& rng) {
  const Field& k = f.field();
  const Space& sp = f.space();
  const std::size_t n = f.n();
  const auto ni = static_cast<std::int64_t>(n);
  switch (fam) {
    case Family::Congruence:
    case Family::CongruenceStar: {
      Matrix p = random_invertible(n, k, matrix_height(k), rng);
      if (f.line() == FormLine::SymmDet) {
        auto r = nth_root(determinant(p).pow(-2), static_cast<unsigned>(n));
        if (!r) return std::nullopt;
        return PreserverElement(sp, k, Congruence{*r, p, false});
      }
      const FieldElement r = field_sample_nonzero(k, 1, rng);
      force_det(p, r.pow(-ni / 2));
      return PreserverElement(sp, k, Congruence{r, p, fam == Family::CongruenceStar});
    }
    case Family::Sandwich:
    case Family::TransposeSandwich: {
      Matrix a = random_invertible(n, k, matrix_height(k), rng);
      Matrix b = random_invertible(n, k, matrix_height(k), rng);
      force_det(b, determinant(a).inverse());
      if (fam == Family::Sandwich) return PreserverElement(sp, k, Sandwich{a, b});
      return PreserverElement(sp, k, TransposeSandwich{a, b});
    }
    case Family::CubicComposition: {
      Matrix g = random_invertible(2, k, matrix_height(k), rng);
      auto c = nth_root(determinant(g).pow(-6), 4);
      if (!c) return std::nullopt;
      return PreserverElement(sp, k, CubicComposition{*c * sign(rng, k), g});
    }
    case Family::WedgePush:
    case Family::WedgePushStar: {
      Matrix g = random_invertible(6, k, matrix_height(k), rng);
      auto c = nth_root(determinant(g).pow(-2), 4);
      if (!c) return std::nullopt;
      return PreserverElement(sp, k, WedgePush{*c * sign(rng, k), g, fam == Family::WedgePushStar});
    }
    case Family::GSp6: {
      const FieldElement mu = field_sample_nonzero(k, 1, rng);
      auto c = nth_root(mu.pow(-6), 4);
      if (!c) return std::nullopt;
      return PreserverElement(sp, k, GSp6Elem{*c * sign(rng, k), symplectic_similitude(f.gram(), mu, rng), mu});
    }
    case Family::TriplePush: {
      Matrix g1 = random_invertible(2, k, matrix_height(k), rng);
      Matrix g2 = random_invertible(2, k, matrix_height(k), rng);
      Matrix g3 = random_invertible(2, k, matrix_height(k), rng);
      force_det(g3, sign(rng, k) / (determinant(g1) * determinant(g2)));
      return PreserverElement(sp, k, TriplePush{g1, g2, g3, random_perm(rng)});
    }
    case Family::GOPair: {
      auto [g2, mu] = similitude(f.gram(), field_sample_nonzero(k, 1, rng), rng() & 1, rng);
      Matrix g1 = random_invertible(2, k, matrix_height(k), rng);
      force_det(g1, sign(rng, k) / mu);
      return PreserverElement(sp, k, GOPair{g1, g2, mu, f.gram()});
    }
  }
  throw std::logic_error("unhandled family");
}

PreserverElement unconstrained(Family fam, const InvariantForm& f, Rng& rng) {
  const Field& k = f.field();
  const Space& sp = f.space();
  const std::size_t n = f.n();
  const std::int64_t h = matrix_height(k);
  auto inv = [&](std::size_t m) { return random_invertible(m, k, h, rng); };
  auto scalar = [&] { return field_sample_nonzero(k, 5, rng); };
  switch (fam) {
    case Family::Congruence: return {sp, k, Congruence{scalar(), inv(n), false}};
    case Family::CongruenceStar: return {sp, k, Congruence{scalar(), inv(n), true}};
    case Family::Sandwich: return {sp, k, Sandwich{inv(n), inv(n)}};
    case Family::TransposeSandwich: return {sp, k, TransposeSandwich{inv(n), inv(n)}};
    case Family::CubicComposition: return {sp, k, CubicComposition{scalar(), inv(2)}};
    case Family::WedgePush: return {sp, k, WedgePush{scalar(), inv(6), false}};
    case Family::WedgePushStar: return {sp, k, WedgePush{scalar(), inv(6), true}};
    case Family::GSp6: {
      const FieldElement mu = scalar();
      return {sp, k, GSp6Elem{scalar(), symplectic_similitude(f.gram(), mu, rng), mu}};
    }
    case Family::TriplePush: return {sp, k, TriplePush{inv(2), inv(2), inv(2), random_perm(rng)}};
    case Family::GOPair: {
      auto [g2, mu] = similitude(f.gram(), scalar(), rng() & 1, rng);
      return {sp, k, GOPair{inv(2), g2, mu, f.gram()}};
    }
  }
  throw std::logic_error("unhandled family");
}

}  // namespace

PreserverElement sample_group_element(Family fam, const InvariantForm& f, SampleMode mode, Rng& rng) {
  const auto fams = families_for(f);
  if (std::find(fams.begin(), fams.end(), fam) == fams.end()) {
    throw std::invalid_argument("family " + family_name(fam) + " is not attached to " + f.descriptor());
  }
  for (int attempt = 0; attempt < kResampleCap; ++attempt) {
    switch (mode) {
      case SampleMode::Satisfying: {
        if (f.field().is_rational()) return satisfying_rational(fam, f, rng);
        if (auto e = satisfying_prime(fam, f, rng)) return *e;
        break;
      }
      case SampleMode::Unconstrained: return unconstrained(fam, f, rng);
      case SampleMode::Violating: {
        PreserverElement e = unconstrained(fam, f, rng);
        if (!constraint_satisfied(e, f)) return e;
        break;
      }
    }
  }
  throw std::runtime_error("resampling cap exhausted for " + family_name(fam) + " on " + f.descriptor());
}

}  // namespace preserver
