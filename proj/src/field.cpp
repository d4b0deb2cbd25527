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

#include "preserver/field.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace preserver {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 ipow(u64 a, u64 e) {
  u64 r = 1;
  while (e--) r *= a;
  return r;
}

u64 invmod(u64 a, u64 m) {
  if (a % m == 0) throw std::domain_error("division by zero");
  return powmod(a, m - 2, m);
}

u64 reduce_signed(std::int64_t v, u64 m) {
  if (v >= 0) return static_cast<u64>(v) % m;
  // |v| without overflow for INT64_MIN
  const u64 mag = static_cast<u64>(-(v + 1)) + 1;
  const u64 r = mag % m;
  return r == 0 ? 0 : m - r;
}

u64 mpz_mod_u64(const mpz_class& z, u64 m) {
  mpz_class mm;
  mpz_import(mm.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &m);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mm.get_mpz_t());
  u64 out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(u64), 0, 0, r.get_mpz_t());
  return count == 0 ? 0 : out;
}

// r-th root for a prime r dividing p - 1 (Adleman-Manders-Miller).
std::optional<u64> prime_root(u64 a, u64 r, u64 p) {
  const u64 n = p - 1;
  if (powmod(a, n / r, p) != 1) return std::nullopt;
  u64 s = 0;
  u64 t = n;
  while (t % r == 0) {
    t /= r;
    ++s;
  }
  u64 rho = 2;
  while (powmod(rho, n / r, p) == 1) ++rho;
  const u64 gamma = powmod(rho, t, p);  // generator of the Sylow r-subgroup
  // u with r*u = 1 (mod t)
  u64 u = 0;
  if (t > 1) {
    for (u64 c = 1; c <= r; ++c) {
      if ((static_cast<u128>(c) * t + 1) % r == 0) {
        u = static_cast<u64>((static_cast<u128>(c) * t + 1) / r);
        break;
      }
    }
  }
  const u64 x0 = powmod(a, u, p);
  // x0^r = a * e with e in the Sylow subgroup; e is an r-th power there.
  const u64 e = mulmod(powmod(x0, r, p), invmod(a, p), p);
  const u64 zeta = powmod(gamma, ipow(r, s - 1), p);  // order r
  u64 m = 0;
  u64 rpow = 1;
  for (u64 i = 0; i < s; ++i) {
    const u64 partial = mulmod(e, invmod(powmod(gamma, m, p), p), p);
    const u64 h = powmod(partial, ipow(r, s - 1 - i), p);
    u64 d = 0;
    u64 z = 1;
    while (z != h) {
      z = mulmod(z, zeta, p);
      if (++d >= r) return std::nullopt;
    }
    m += d * rpow;
    rpow *= r;
  }
  if (m % r != 0) return std::nullopt;
  const u64 y = powmod(gamma, m / r, p);
  return mulmod(x0, invmod(y, p), p);
}

bool is_kth_power(u64 a, u64 k, u64 p) {
  if (a == 0) return true;
  const u64 g = std::gcd(k, p - 1);
  return powmod(a, (p - 1) / g, p) == 1;
}

// g-th root for g | p - 1, peeling one prime factor at a time and keeping a
// branch that stays a power of the remaining cofactor.
std::optional<u64> divisor_root(u64 a, u64 g, u64 p) {
  if (g == 1) return a;
  u64 r = 2;
  while (g % r) ++r;
  auto z0 = prime_root(a, r, p);
  if (!z0) return std::nullopt;
  const u64 rest = g / r;
  // primitive r-th root of unity
  u64 rho = 2;
  while (powmod(rho, (p - 1) / r, p) == 1) ++rho;
  const u64 zeta = powmod(rho, (p - 1) / r, p);
  u64 z = *z0;
  for (u64 j = 0; j < r; ++j) {
    if (is_kth_power(z, rest, p)) return divisor_root(z, rest, p);
    z = mulmod(z, zeta, p);
  }
  return std::nullopt;
}

std::optional<mpz_class> integer_root(const mpz_class& v, unsigned k) {
  if (v < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = integer_root(-v, k);
    if (!r) return std::nullopt;
    return mpz_class(-*r);
  }
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic for 64-bit inputs
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p) || p >= (1ULL << 62)) {
    throw std::invalid_argument("modulus not an admissible prime: " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view descriptor) {
  if (descriptor == "Q") return rationals();
  if (descriptor.starts_with("Fp:")) {
    auto digits = descriptor.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw std::invalid_argument("malformed field descriptor: " + std::string(descriptor));
    }
    return prime(p);
  }
  throw std::invalid_argument("unknown field descriptor: " + std::string(descriptor) +
                              " (expected \"Q\" or \"Fp:<prime>\")");
}

std::string Field::descriptor() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t v) const {
  if (is_rational()) return FieldElement(mpq_class(mpz_class(static_cast<long>(v))));
  return FieldElement(reduce_signed(v, modulus_), modulus_);
}

FieldElement Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return FieldElement(q);
  const u64 num = mpz_mod_u64(q.get_num(), modulus_);
  const u64 den = mpz_mod_u64(q.get_den(), modulus_);
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  return FieldElement(mulmod(num, invmod(den, modulus_), modulus_), modulus_);
}

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(mpq_class q) : v_(std::move(q)) {
  std::get<mpq_class>(v_).canonicalize();
}

FieldElement::FieldElement(std::uint64_t value, std::uint64_t modulus)
    : v_(Residue{value % modulus, modulus}) {}

Field FieldElement::field() const {
  if (auto* r = std::get_if<Residue>(&v_)) return Field(r->modulus);
  return Field::rationals();
}

bool FieldElement::is_zero() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool FieldElement::is_one() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  const auto* a = std::get_if<Residue>(&v_);
  const auto* b = std::get_if<Residue>(&o.v_);
  if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus)) {
    throw std::invalid_argument("field mismatch in arithmetic");
  }
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    const u64 s = r->value + std::get<Residue>(o.v_).value;
    r->value = s >= r->modulus ? s - r->modulus : s;
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    const u64 b = std::get<Residue>(o.v_).value;
    r->value = r->value >= b ? r->value - b : r->value + r->modulus - b;
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value = mulmod(r->value, std::get<Residue>(o.v_).value, r->modulus);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same_field(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value = mulmod(r->value, invmod(std::get<Residue>(o.v_).value, r->modulus), r->modulus);
  } else {
    std::get<mpq_class>(v_) /= std::get<mpq_class>(o.v_);
  }
  return *this;
}

FieldElement FieldElement::operator-() const {
  if (auto* r = std::get_if<Residue>(&v_)) {
    return FieldElement(r->value == 0 ? 0 : r->modulus - r->value, r->modulus);
  }
  return FieldElement(mpq_class(-std::get<mpq_class>(v_)));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (auto* r = std::get_if<Residue>(&v_)) return FieldElement(invmod(r->value, r->modulus), r->modulus);
  return FieldElement(mpq_class(1 / std::get<mpq_class>(v_)));
}

FieldElement FieldElement::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  if (auto* r = std::get_if<Residue>(&v_)) {
    return FieldElement(powmod(r->value, static_cast<u64>(e), r->modulus), r->modulus);
  }
  const auto& q = std::get<mpq_class>(v_);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return FieldElement(mpq_class(num, den));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  const auto* ra = std::get_if<FieldElement::Residue>(&a.v_);
  const auto* rb = std::get_if<FieldElement::Residue>(&b.v_);
  if ((ra == nullptr) != (rb == nullptr)) return false;
  if (ra) return ra->modulus == rb->modulus && ra->value == rb->value;
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

std::string FieldElement::to_string() const {
  if (auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

FieldElement parse_element(const Field& field, std::string_view text) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed scalar: \"" + s + "\"");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
  q.canonicalize();
  return field.from_rational(q);
}

FieldElement field_sample_int(const Field& field, std::int64_t lo, std::int64_t hi, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return field.from_int(dist(rng));
}

FieldElement field_sample(const Field& field, std::uint64_t height_bound, Rng& rng) {
  if (height_bound < 1) throw std::invalid_argument("height bound must be >= 1");
  if (!field.is_rational()) {
    std::uniform_int_distribution<u64> dist(0, field.modulus() - 1);
    return FieldElement(dist(rng), field.modulus());
  }
  const auto h = static_cast<std::int64_t>(height_bound);
  std::uniform_int_distribution<std::int64_t> num(-h, h);
  std::uniform_int_distribution<std::int64_t> den(1, h);
  const auto a = num(rng);
  const auto b = den(rng);
  return FieldElement(mpq_class(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b))));
}

FieldElement field_sample(const Field& field, std::uint64_t height_bound, std::uint64_t seed) {
  Rng rng(seed);
  return field_sample(field, height_bound, rng);
}

FieldElement field_sample_nonzero(const Field& field, std::uint64_t height_bound, Rng& rng) {
  for (;;) {
    auto x = field_sample(field, height_bound, rng);
    if (!x.is_zero()) return x;
  }
}

std::optional<FieldElement> nth_root(const FieldElement& a, unsigned k) {
  if (k == 0) throw std::invalid_argument("zeroth root");
  if (a.is_zero()) return a;
  if (a.is_rational()) {
    auto num = integer_root(a.rational().get_num(), k);
    auto den = integer_root(a.rational().get_den(), k);
    if (!num || !den) return std::nullopt;
    return FieldElement(mpq_class(*num, *den));
  }
  const u64 p = a.field().modulus();
  const u64 v = a.residue();
  const u64 n = p - 1;
  const u64 g = std::gcd(static_cast<u64>(k), n);
  if (!is_kth_power(v, k, p)) return std::nullopt;
  // solve y^g = v, then x = y^alpha with alpha*k = g (mod p-1)
  auto y = divisor_root(v, g, p);
  if (!y) return std::nullopt;
  const u64 kk = k / g;
  const u64 nn = n / g;
  u64 alpha = 0;
  if (nn > 1) {
    // inverse of kk modulo nn (gcd(kk, nn) = 1)
    __int128 t0 = 0, t1 = 1, r0 = static_cast<__int128>(nn), r1 = static_cast<__int128>(kk % nn);
    while (r1 != 0) {
      const __int128 q = r0 / r1;
      std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
      std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    }
    if (t0 < 0) t0 += nn;
    alpha = static_cast<u64>(t0);
  }
  // y^(g*alpha*kk) = y^g * y^(j*(p-1)) = v
  FieldElement x(powmod(*y, alpha, p), p);
  return x;
}

}  // namespace preserver
