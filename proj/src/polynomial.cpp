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

#include "preserver/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace preserver {

Polynomial::Polynomial(const Field& field, int nvars) : field_(field), nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw std::invalid_argument("polynomial supports at most " + std::to_string(kMaxVars) + " variables");
  }
}

Polynomial Polynomial::constant(const Field& field, int nvars, const FieldElement& c) {
  Polynomial p(field, nvars);
  if (!c.is_zero()) p.terms_.emplace_back(0, c);
  return p;
}

Polynomial Polynomial::variable(const Field& field, int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Polynomial p(field, nvars);
  p.terms_.emplace_back(Key{1} << (kBits * index), field.one());
  return p;
}

int Polynomial::key_degree(Key k) {
  int d = 0;
  for (int v = 0; v < kMaxVars; ++v) d += exponent(k, v);
  return d;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, key_degree(k));
  return d;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || !(field_ == o.field_)) {
    throw std::invalid_argument("polynomial ring mismatch");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      FieldElement s = a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [k, v] : p.terms_) v = -v;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.field_, a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.total_degree() + b.total_degree() >= (1 << Polynomial::kBits)) {
    throw std::overflow_error("polynomial degree overflow");
  }
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // Exponent fields never carry: total degree stays below 64.
      prod.emplace_back(ka + kb, ca * cb);
    }
  }
  std::sort(prod.begin(), prod.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < prod.size();) {
    std::size_t j = i + 1;
    FieldElement s = std::move(prod[i].second);
    while (j < prod.size() && prod[j].first == prod[i].first) s += prod[j++].second;
    if (!s.is_zero()) out.terms_.emplace_back(prod[i].first, std::move(s));
    i = j;
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("evaluation point arity");
  FieldElement sum = field_.zero();
  for (const auto& [k, c] : terms_) {
    FieldElement t = c;
    for (int v = 0; v < nvars_; ++v) {
      const int e = exponent(k, v);
      if (e) t *= point[v].pow(e);
    }
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")";
    first = false;
    for (int v = 0; v < nvars_; ++v) {
      const int e = exponent(k, v);
      if (e == 1) os << "*y" << v;
      if (e > 1) os << "*y" << v << "^" << e;
    }
  }
  return os.str();
}

}  // namespace preserver
