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

#include "qpack/gf.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace qpack::gf {
namespace {

using Coeffs = std::vector<std::uint32_t>;

TEST(MakeField, PrimeFieldHasLinearModulus) {
  const Field f = make_field(5);
  EXPECT_EQ(f.p(), 5u);
  EXPECT_EQ(f.n(), 1u);
  EXPECT_EQ(f.q(), 5u);
  EXPECT_EQ(f.modulus(), (Coeffs{0, 1}));
}

TEST(MakeField, RejectsNonPrimePowers) {
  EXPECT_THROW(make_field(6), NotPrimePower);
  EXPECT_THROW(make_field(12), NotPrimePower);
  EXPECT_THROW(make_field(1), NotPrimePower);
  EXPECT_THROW(make_field(0), NotPrimePower);
}

TEST(MakeField, ModulusIsFirstIrreducibleInCoefficientOrder) {
  // Oracle: walk monic polynomials in order and take the first one that is
  // not a product of two lower-degree monics.
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125}) {
    const auto [p, n] = prime_power(q);
    const auto reducible = testing::reducible_monics(static_cast<std::uint32_t>(p), n);
    Coeffs expected;
    for (const auto& m : testing::monics(static_cast<std::uint32_t>(p), n)) {
      if (!reducible.count(m)) {
        expected = m;
        break;
      }
    }
    EXPECT_EQ(make_field(q).modulus(), expected) << "q=" << q;
  }
  // Frozen from the oracle above.
  EXPECT_EQ(make_field(9).modulus(), (Coeffs{1, 0, 1}));
  EXPECT_EQ(make_field(4).modulus(), (Coeffs{1, 1, 1}));
  EXPECT_EQ(make_field(8).modulus(), (Coeffs{1, 1, 0, 1}));
  EXPECT_EQ(make_field(27).modulus(), (Coeffs{1, 2, 0, 1}));
}

TEST(MakeField, IsDeterministic) {
  for (std::uint64_t q : {2, 3, 4, 9, 13, 16, 27}) EXPECT_TRUE(make_field(q) == make_field(q));
}

TEST(Field, FromModulusRejectsBadModuli) {
  EXPECT_THROW(Field::from_modulus(3, 2, {2, 0, 1}), InvalidModulus);  // x^2 + 2 = (x+1)(x+2)
  EXPECT_THROW(Field::from_modulus(3, 2, {1, 0, 2}), InvalidModulus);  // not monic
  EXPECT_THROW(Field::from_modulus(4, 1, {0, 1}), InvalidModulus);     // 4 not prime
  EXPECT_THROW(Field::from_modulus(3, 2, {1, 1}), InvalidModulus);     // wrong degree
  EXPECT_NO_THROW(Field::from_modulus(3, 2, {2, 1, 1}));               // x^2 + x + 2 is irreducible
}

TEST(Arith, PrimeFieldInverse) {
  const Field f = make_field(5);
  EXPECT_EQ(f.inv(f.element(2)), f.element(3));
  // Exhaustive multiplication table: 2 * 3 is the only product of 2 giving 1.
  for (std::uint32_t b = 0; b < 5; ++b)
    EXPECT_EQ(f.mul(f.element(2), f.element(b)) == f.one(), b == 3);
}

TEST(Arith, Gf9SquareOfGeneratorIsMinusOne) {
  const Field f = make_field(9);
  const FieldElement x = f.from_coeffs(Coeffs{0, 1});
  EXPECT_EQ(f.mul(x, x), f.element(2));
  EXPECT_EQ(f.coeffs(f.mul(x, x)), (Coeffs{2, 0}));
}

TEST(Arith, Gf9MatchesGaussianIntegersMod3) {
  // x^2 + 1 makes GF(9) the ring Z_3[i]: (a+bi)(c+di) = (ac-bd) + (ad+bc)i.
  const Field f = make_field(9);
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      for (std::uint32_t c = 0; c < 3; ++c)
        for (std::uint32_t d = 0; d < 3; ++d) {
          const Coeffs want{(a * c + 2 * b * d) % 3, (a * d + b * c) % 3};
          EXPECT_EQ(f.coeffs(f.mul(f.from_coeffs(Coeffs{a, b}), f.from_coeffs(Coeffs{c, d}))), want);
        }
}

TEST(Arith, AdditiveIdentity) {
  for (std::uint64_t q : {2, 4, 7, 9, 25}) {
    const Field f = make_field(q);
    for (auto a : f.elements()) EXPECT_EQ(f.add(a, f.zero()), a);
  }
}

TEST(Arith, DivisionByZeroThrows) {
  const Field f = make_field(7);
  EXPECT_THROW(f.inv(f.zero()), DivisionByZero);
  EXPECT_THROW(f.div(f.one(), f.zero()), DivisionByZero);
}

TEST(Arith, ForeignElementsAreRejected) {
  const Field f = make_field(5);
  EXPECT_THROW(f.add(FieldElement{5}, f.one()), ElementOutOfField);
  EXPECT_THROW(f.element(9), ElementOutOfField);
  EXPECT_THROW(f.from_coeffs(Coeffs{5}), ElementOutOfField);
  EXPECT_THROW(f.from_coeffs(Coeffs{1, 1}), ElementOutOfField);
}

void expect_field_axioms_exhaustive(const Field& f) {
  const auto E = f.elements();
  for (auto a : E) {
    EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
    EXPECT_EQ(f.mul(a, f.one()), a);
    if (a != f.zero()) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    EXPECT_EQ(f.pow(a, f.q()), a);  // Frobenius fixes GF(q)
    for (auto b : E) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      if (b != f.zero()) EXPECT_EQ(f.mul(f.div(a, b), b), a);
      for (auto c : E) {
        EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

class SmallFieldAxioms : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SmallFieldAxioms, HoldExhaustively) { expect_field_axioms_exhaustive(make_field(GetParam())); }

INSTANTIATE_TEST_SUITE_P(Gf, SmallFieldAxioms, ::testing::Values(2, 3, 4, 5, 7, 8, 9, 11, 13, 16));

class LargeFieldAxioms : public ::testing::TestWithParam<std::uint64_t> {};

// q above the table limit exercises the direct polynomial path.
TEST_P(LargeFieldAxioms, HoldOnRandomTriples) {
  const Field f = make_field(GetParam());
  std::mt19937_64 rng(GetParam());
  std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
  for (int i = 0; i < 2000; ++i) {
    const FieldElement a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    ASSERT_EQ(f.mul(a, b), f.mul(b, a));
    if (a != f.zero()) ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
  }
}

INSTANTIATE_TEST_SUITE_P(Gf, LargeFieldAxioms, ::testing::Values(25, 27, 121, 343, 512, 729, 1031, 2401));

TEST(Enumerate, CanonicalOrder) {
  const Field f3 = make_field(3);
  const auto e3 = f3.elements();
  ASSERT_EQ(e3.size(), 3u);
  for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ(f3.coeffs(e3[i]), (Coeffs{i}));

  const Field f4 = make_field(4);
  const auto e4 = f4.elements();
  ASSERT_EQ(e4.size(), 4u);
  EXPECT_EQ(f4.coeffs(e4[0]), (Coeffs{0, 0}));  // 0
  EXPECT_EQ(f4.coeffs(e4[1]), (Coeffs{1, 0}));  // 1
  EXPECT_EQ(f4.coeffs(e4[2]), (Coeffs{0, 1}));  // x
  EXPECT_EQ(f4.coeffs(e4[3]), (Coeffs{1, 1}));  // x + 1

  for (std::uint64_t q : {2, 5, 8, 9, 27}) {
    const auto e = make_field(q).elements();
    EXPECT_EQ(e.size(), q);
    EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
    EXPECT_EQ(e.front().value, 0u);
  }
}

TEST(Enumerate, CoefficientRoundTrip) {
  const Field f = make_field(27);
  for (auto a : f.elements()) EXPECT_EQ(f.from_coeffs(f.coeffs(a)), a);
}

TEST(Primes, NextPrimeExamples) {
  EXPECT_EQ(next_prime_geq(17), 17u);
  EXPECT_EQ(next_prime_geq(14), 17u);
  EXPECT_EQ(next_prime_geq(8), 11u);
  EXPECT_EQ(next_prime_geq(2), 2u);
  EXPECT_THROW(next_prime_geq(1), OutOfRange);
}

TEST(Primes, NextPrimeAgreesWithSieveAndBertrand) {
  const auto prime = testing::sieve(20000);
  for (std::uint64_t m = 2; m <= 10000; ++m) {
    std::uint64_t expect = m;
    while (!prime[expect]) ++expect;
    const auto got = next_prime_geq(m);
    ASSERT_EQ(got, expect) << m;
    ASSERT_LT(got, 2 * m);
  }
}

TEST(Primes, PrimePowerDecomposition) {
  EXPECT_EQ(prime_power(81).p, 3u);
  EXPECT_EQ(prime_power(81).n, 4u);
  EXPECT_EQ(prime_power(13).n, 1u);
  EXPECT_TRUE(is_prime_power(128));
  EXPECT_FALSE(is_prime_power(100));
  EXPECT_EQ(next_prime_power_geq(10), 11u);
  EXPECT_EQ(next_prime_power_geq(24), 25u);
  EXPECT_EQ(next_prime_power_geq(126), 127u);
}

}  // namespace
}  // namespace qpack::gf
