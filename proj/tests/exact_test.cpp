// Copyright 2026 The cgent Authors
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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cgent/exact.hpp"

namespace cgent {
namespace {

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(12), 479001600);
  EXPECT_EQ(factorial(25).get_str(), "15511210043330985984000000");
}

TEST(Factorial, NegativeIsDomainError) { EXPECT_THROW(factorial(-1), DomainError); }

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(make_rational(7, 3), 0), 1);
  EXPECT_EQ(pochhammer(BigRational(3), 2), 12);
  EXPECT_EQ(pochhammer(BigRational(-3), 5), 0);
  EXPECT_EQ(pochhammer(make_rational(1, 2), 2), make_rational(3, 4));
  EXPECT_EQ(pochhammer(BigRational(-3), 3), -6);
  EXPECT_THROW(pochhammer(BigRational(1), -1), DomainError);
}

TEST(Pochhammer, RecurrenceAndFactorialProperty) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9), len(0, 12);
  for (int trial = 0; trial < 300; ++trial) {
    const BigRational x = make_rational(num(rng), den(rng));
    const int k = len(rng);
    EXPECT_EQ(pochhammer(x, k + 1), pochhammer(x, k) * (x + k));
  }
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(pochhammer(BigRational(1), n), BigRational(factorial(n)));
}

TEST(BigRational, StaysReduced) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> v(-1000, 1000), d(1, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    BigRational a = make_rational(v(rng), d(rng));
    BigRational b = make_rational(v(rng), d(rng));
    for (const BigRational& r : std::vector<BigRational>{a + b, a - b, a * b}) {
      BigInteger g;
      mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
      EXPECT_EQ(g, 1);
      EXPECT_GT(r.get_den(), 0);
    }
  }
  EXPECT_EQ(to_fraction_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_fraction_string(BigRational(0)), "0/1");
  EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(HalfInt, ParsesAllForms) {
  EXPECT_EQ(HalfInt::parse("5/2").twice(), 5);
  EXPECT_EQ(HalfInt::parse("-1/2").twice(), -1);
  EXPECT_EQ(HalfInt::parse("2.5").twice(), 5);
  EXPECT_EQ(HalfInt::parse("-0.5").twice(), -1);
  EXPECT_EQ(HalfInt::parse("3").twice(), 6);
  EXPECT_EQ(HalfInt::parse("4.0").twice(), 8);
  EXPECT_EQ(HalfInt::parse("9/2"), HalfInt::parse("4.5"));
  EXPECT_EQ(HalfInt::parse("6/1").twice(), 12);
}

TEST(HalfInt, RejectsNonHalfIntegers) {
  for (const char* bad : {"", "x", "1/3", "2/2", "0.25", "1.55", "1/", "/2", "5/2x", "--1"}) {
    EXPECT_THROW(HalfInt::parse(bad), DomainError) << bad;
  }
}

TEST(HalfInt, Formatting) {
  EXPECT_EQ(HalfInt::from_twice(5).to_string(), "5/2");
  EXPECT_EQ(HalfInt::from_twice(-3).to_string(), "-3/2");
  EXPECT_EQ(HalfInt::from_twice(4).to_string(), "2");
  EXPECT_EQ(HalfInt::from_twice(0).to_string(), "0");
  for (int t = -9; t <= 9; ++t) {
    EXPECT_EQ(HalfInt::parse(HalfInt::from_twice(t).to_string()).twice(), t);
  }
}

TEST(HalfInt, PairInvariants) {
  const HalfInt j = HalfInt::from_twice(3);
  EXPECT_TRUE(is_spin_pair(j, HalfInt::from_twice(-3)));
  EXPECT_TRUE(is_spin_pair(j, HalfInt::from_twice(1)));
  EXPECT_FALSE(is_spin_pair(j, HalfInt::from_twice(5)));
  EXPECT_FALSE(is_spin_pair(j, HalfInt::from_twice(2)));
  EXPECT_FALSE(is_spin_pair(HalfInt::from_twice(-2), HalfInt::from_twice(0)));
  EXPECT_THROW(HalfInt::from_twice(3).as_integer(), DomainError);
}

TEST(SignedSqrtRational, FloatConversion) {
  EXPECT_DOUBLE_EQ(ssr_to_float({1, make_rational(1, 2)}), 0.7071067811865476);
  EXPECT_EQ(ssr_to_float(SignedSqrtRational::zero()), 0.0);
  EXPECT_EQ(ssr_to_float({-1, BigRational(4)}), -2.0);
}

TEST(SignedSqrtRational, CanonicalForm) {
  SignedSqrtRational z(1, BigRational(0));
  EXPECT_EQ(z.sign(), 0);
  EXPECT_EQ(z, SignedSqrtRational::zero());
  EXPECT_THROW(SignedSqrtRational(1, BigRational(-1)), DomainError);
  SignedSqrtRational a(-1, make_rational(2, 3));
  EXPECT_EQ(a.squared(), make_rational(2, 3));
  EXPECT_EQ((-a).sign(), 1);
  EXPECT_NE(a, -a);
  EXPECT_EQ(a * a, SignedSqrtRational(1, make_rational(4, 9)));
  EXPECT_EQ(SignedSqrtRational::from_rational(make_rational(-3, 2)), SignedSqrtRational(-1, make_rational(9, 4)));
}

TEST(SquarefreePart, KnownValues) {
  EXPECT_EQ(squarefree_part(1), 1);
  EXPECT_EQ(squarefree_part(12), 3);
  EXPECT_EQ(squarefree_part(72), 2);
  EXPECT_EQ(squarefree_part(49), 1);
  EXPECT_EQ(squarefree_part(BigInteger(1000003) * 1000003 * 6), 6);
  EXPECT_EQ(squarefree_part(BigInteger(1000003) * 999983), BigInteger(1000003) * 999983);
  EXPECT_THROW(squarefree_part(0), DomainError);
}

TEST(RadicalSum, CancelsOnlyEqualRadicals) {
  RadicalSum s;
  s.add({1, make_rational(1, 2)});   // sqrt(2)/2
  s.add({-1, make_rational(2, 4)});  // -sqrt(2)/2
  EXPECT_TRUE(s.is_zero());

  s.add({1, BigRational(2)});
  s.add({-1, BigRational(3)});
  EXPECT_FALSE(s.is_zero());
  EXPECT_NEAR(s.to_double(), std::sqrt(2.0) - std::sqrt(3.0), 1e-15);
  EXPECT_EQ(s.to_string(), "1/1*sqrt(2) - 1/1*sqrt(3)");
}

TEST(RadicalSum, ProductsOfSurds) {
  // sqrt(2/3) * sqrt(3/8) = 1/2; sqrt(6) * sqrt(10) = 2 sqrt(15)
  RadicalSum s;
  s.add_product({1, make_rational(2, 3)}, {1, make_rational(3, 8)});
  s.add_rational(make_rational(-1, 2));
  EXPECT_TRUE(s.is_zero());
  RadicalSum t;
  t.add_product({1, BigRational(6)}, {-1, BigRational(10)});
  ASSERT_EQ(t.terms().size(), 1u);
  EXPECT_EQ(t.terms().begin()->first, 15);
  EXPECT_EQ(t.terms().begin()->second, -2);
}

}  // namespace
}  // namespace cgent
