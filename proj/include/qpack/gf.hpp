// Copyright 2026 The qpack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file gf.hpp
 * @brief Exact arithmetic in GF(p^n) plus the small number-theory helpers the
 * bound calculator needs.
 *
 * An element of GF(p^n) is the residue of a polynomial of degree < n over
 * GF(p) modulo a monic irreducible modulus. Elements are stored as the integer
 * whose base-p digits are the coefficients, constant term least significant:
 * the element c0 + c1 x + ... + c_{n-1} x^{n-1} has value
 * c0 + c1 p + ... + c_{n-1} p^{n-1}. That integer doubles as the canonical
 * total order (zero minimal) and as a dense index in [0, q).
 *
 * The modulus chosen by make_field() is the first monic irreducible of degree
 * n when monic polynomials are ordered by the same integer value of their
 * lower coefficients, so identical q always gives identical fields.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpack/error.hpp"

namespace qpack::gf {

// ---------------------------------------------------------------------------
// Integers
// ---------------------------------------------------------------------------

/// Deterministic trial division up to sqrt(m).
constexpr bool is_prime(std::uint64_t m) noexcept {
  if (m < 2) return false;
  if (m < 4) return true;
  if (m % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= m / d; d += 2)
    if (m % d == 0) return false;
  return true;
}

struct PrimePower {
  std::uint64_t p = 0;
  unsigned n = 0;
};

/// Decomposes q = p^n with p prime; throws NotPrimePower otherwise.
inline PrimePower prime_power(std::uint64_t q) {
  if (q < 2) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  unsigned n = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  return {p, n};
}

inline bool is_prime_power(std::uint64_t q) noexcept {
  try {
    prime_power(q);
    return true;
  } catch (const NotPrimePower&) {
    return false;
  }
}

/// Smallest prime >= m. Every result is checked against Bertrand's postulate
/// (result < 2m for m >= 2); a failure there is a logic error, not user error.
inline std::uint64_t next_prime_geq(std::uint64_t m) {
  if (m < 2) throw OutOfRange("next_prime_geq requires m >= 2");
  std::uint64_t c = m;
  while (!is_prime(c)) ++c;
  if (c >= 2 * m) throw std::logic_error("Bertrand bound violated");
  return c;
}

/// Smallest prime power >= m.
inline std::uint64_t next_prime_power_geq(std::uint64_t m) {
  if (m < 2) throw OutOfRange("next_prime_power_geq requires m >= 2");
  std::uint64_t c = m;
  while (!is_prime_power(c)) ++c;
  return c;
}

// ---------------------------------------------------------------------------
// Polynomials over GF(p), coefficient vectors with the constant term first.
// ---------------------------------------------------------------------------

using Poly = std::vector<std::uint32_t>;

namespace poly {

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  trim(out);
  return out;
}

/// Remainder of a modulo a monic m.
inline Poly mod_monic(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - lead) * m[i]) % p);
    trim(a);
  }
  return a;
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-p digits of `index`.
inline Poly monic_from_index(std::uint64_t index, unsigned degree, std::uint32_t p) {
  Poly f(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Irreducibility by trial division against every monic polynomial of degree
/// 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (mod_monic(f, monic_from_index(idx, d, p), p).empty()) return false;
  }
  return true;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Field
// ---------------------------------------------------------------------------

/// A field element; only meaningful together with the Field that produced it.
struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field {
 public:
  /// Validates the modulus (monic, degree n, irreducible over GF(p)).
  static Field from_modulus(std::uint32_t p, unsigned n, Poly modulus) {
    if (!is_prime(p)) throw InvalidModulus("characteristic is not prime");
    if (n < 1) throw InvalidModulus("extension degree must be >= 1");
    if (modulus.size() != n + 1u || modulus.back() != 1)
      throw InvalidModulus("modulus must be monic of degree n");
    for (auto c : modulus)
      if (c >= p) throw InvalidModulus("modulus coefficient out of range");
    if (n > 31) throw InvalidModulus("field too large");
    const std::uint64_t q = poly::ipow(p, n);
    if (q > (std::uint64_t{1} << 31)) throw InvalidModulus("field too large");
    if (!poly::is_irreducible(modulus, p))
      throw InvalidModulus("modulus is reducible");
    return Field(p, n, static_cast<std::uint32_t>(q), std::move(modulus));
  }

  std::uint32_t p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  const Poly& modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }

  /// Element with the given canonical value.
  FieldElement element(std::uint64_t value) const {
    if (value >= q_) throw ElementOutOfField("value " + std::to_string(value) + " not below q");
    return {static_cast<std::uint32_t>(value)};
  }

  /// Length-n coefficient vector, constant term first.
  std::vector<std::uint32_t> coeffs(FieldElement a) const {
    check(a);
    std::vector<std::uint32_t> c(n_);
    std::uint32_t v = a.value;
    for (auto& x : c) {
      x = v % p_;
      v /= p_;
    }
    return c;
  }

  FieldElement from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() != n_) throw ElementOutOfField("expected " + std::to_string(n_) + " coefficients");
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= p_) throw ElementOutOfField("coefficient out of range");
      v = v * p_ + c[i];
    }
    return {static_cast<std::uint32_t>(v)};
  }

  /// All q elements in canonical order.
  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out(q_);
    for (std::uint32_t v = 0; v < q_; ++v) out[v] = {v};
    return out;
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    check(a), check(b);
    if (tables_) return {tables_->add[a.value * q_ + b.value]};
    return add_raw(a, b);
  }

  FieldElement neg(FieldElement a) const {
    check(a);
    if (n_ == 1) return {a.value == 0 ? 0 : p_ - a.value};
    std::uint32_t out = 0, scale = 1, v = a.value;
    for (unsigned i = 0; i < n_; ++i) {
      const std::uint32_t d = v % p_;
      v /= p_;
      out += ((p_ - d) % p_) * scale;
      scale *= p_;
    }
    return {out};
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    check(a), check(b);
    if (tables_) return {tables_->mul[a.value * q_ + b.value]};
    return mul_raw(a, b);
  }

  FieldElement inv(FieldElement a) const {
    check(a);
    if (a.value == 0) throw DivisionByZero("inverse of zero");
    if (tables_) return {tables_->inv[a.value]};
    return pow(a, q_ - 2);
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// a^e with a^0 = 1 (including 0^0).
  FieldElement pow(FieldElement a, std::uint64_t e) const {
    check(a);
    FieldElement result = one();
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.modulus_ == b.modulus_;
  }

 private:
  // Tables are built when q^2 stays small; above that arithmetic is direct.
  static constexpr std::uint32_t kTableLimit = 256;

  struct Tables {
    std::vector<std::uint32_t> add, mul, inv;
  };

  Field(std::uint32_t p, unsigned n, std::uint32_t q, Poly modulus)
      : p_(p), n_(n), q_(q), modulus_(std::move(modulus)) {
    if (q_ <= kTableLimit) build_tables();
  }

  void check(FieldElement a) const {
    if (a.value >= q_) throw ElementOutOfField("element not in GF(" + std::to_string(q_) + ")");
  }

  Poly to_poly(FieldElement a) const {
    Poly c(n_);
    std::uint32_t v = a.value;
    for (auto& x : c) {
      x = v % p_;
      v /= p_;
    }
    poly::trim(c);
    return c;
  }

  FieldElement from_poly(const Poly& c) const {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i];
    return {static_cast<std::uint32_t>(v)};
  }

  FieldElement add_raw(FieldElement a, FieldElement b) const {
    if (n_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.value} + b.value) % p_)};
    std::uint32_t out = 0, scale = 1, x = a.value, y = b.value;
    for (unsigned i = 0; i < n_; ++i) {
      out += ((x % p_ + y % p_) % p_) * scale;
      x /= p_;
      y /= p_;
      scale *= p_;
    }
    return {out};
  }

  FieldElement mul_raw(FieldElement a, FieldElement b) const {
    if (n_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.value} * b.value) % p_)};
    return from_poly(poly::mod_monic(poly::mul(to_poly(a), to_poly(b), p_), modulus_, p_));
  }

  void build_tables() {
    auto t = std::make_shared<Tables>();
    t->add.resize(std::size_t{q_} * q_);
    t->mul.resize(std::size_t{q_} * q_);
    t->inv.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        t->add[a * q_ + b] = add_raw({a}, {b}).value;
        const std::uint32_t m = mul_raw({a}, {b}).value;
        t->mul[a * q_ + b] = m;
        if (m == 1) t->inv[a] = b;
      }
    }
    tables_ = std::move(t);
  }

  std::uint32_t p_;
  unsigned n_;
  std::uint32_t q_;
  Poly modulus_;
  std::shared_ptr<const Tables> tables_;
};

/// GF(q) with the first monic irreducible modulus in coefficient order.
inline Field make_field(std::uint64_t q) {
  const auto [p, n] = prime_power(q);
  if (q > (std::uint64_t{1} << 31)) throw NotPrimePower("field order too large");
  const auto p32 = static_cast<std::uint32_t>(p);
  const std::uint64_t candidates = poly::ipow(p, n);
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    Poly f = poly::monic_from_index(idx, n, p32);
    if (poly::is_irreducible(f, p32)) return Field::from_modulus(p32, n, std::move(f));
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace qpack::gf
