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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cgent {

using BigInteger = mpz_class;
/// Always stored in lowest terms with a positive denominator. Every GMP
/// arithmetic operator canonicalises its result; use make_rational() when
/// building from a raw numerator/denominator pair.
using BigRational = mpq_class;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

BigRational make_rational(const BigInteger& num, const BigInteger& den);

/// "p/q" with q > 0, including integers ("3/1") and zero ("0/1").
std::string to_fraction_string(const BigRational& r);

int sign_of(const BigRational& r);

/// A spin magnitude or projection j, m in Z/2, held as the integer 2j.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt from_integer(std::int64_t n) { return HalfInt(2 * n); }

  /// Accepts "5/2", "-1/2", "2.5", "-0.5" and "3".
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Throws DomainError for odd twice values.
  std::int64_t as_integer() const;
  BigRational as_rational() const { return make_rational(twice_, 2); }

  /// "5/2", "-1/2", "2", "0".
  std::string to_string() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

/// Valid spin magnitude: 2j >= 0.
bool is_spin(HalfInt j);
/// Valid (j, m) pair: j a spin, |m| <= j and j - m integral.
bool is_spin_pair(HalfInt j, HalfInt m);
/// Throws DomainError naming `what` when (j, m) is not a valid pair.
void require_spin_pair(HalfInt j, HalfInt m, std::string_view what);

/// Exact value sign * sqrt(radicand). Canonical: sign == 0 iff radicand == 0,
/// so structural equality is value equality.
class SignedSqrtRational {
 public:
  SignedSqrtRational() = default;
  /// Throws DomainError on a negative radicand; a zero radicand forces sign 0.
  SignedSqrtRational(int sign, BigRational radicand);

  static SignedSqrtRational zero() { return {}; }
  static SignedSqrtRational one() { return {1, BigRational(1)}; }
  /// sign(value) * sqrt(value^2), i.e. the rational embedded as a surd.
  static SignedSqrtRational from_rational(const BigRational& value);

  int sign() const { return sign_; }
  const BigRational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// The square value^2 = radicand; the sign is discarded.
  const BigRational& squared() const { return radicand_; }

  SignedSqrtRational operator-() const;
  SignedSqrtRational operator*(const SignedSqrtRational& o) const;

  friend bool operator==(const SignedSqrtRational& a, const SignedSqrtRational& b) {
    return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
  }

  std::string to_string() const;

 private:
  int sign_ = 0;
  BigRational radicand_{0};
};

double ssr_to_float(const SignedSqrtRational& v);
double to_double(const BigRational& r);

/// n! for n >= 0; DomainError for negative n.
BigInteger factorial(std::int64_t n);

/// Rising factorial x (x+1) ... (x+k-1), evaluated as a product so negative
/// integer bases give exact zeros. k = 0 gives 1; negative k is a DomainError.
BigRational pochhammer(const BigRational& x, std::int64_t k);

/// Square-free part of a positive integer: the unique square-free k with
/// n = k * s^2.
BigInteger squarefree_part(const BigInteger& n);

/// c * sqrt(radical) with radical square-free and positive.
struct Surd {
  BigRational coeff;
  BigInteger radical{1};
};
Surd to_surd(const SignedSqrtRational& v);

/// Finite sum  sum_k c_k sqrt(k)  over distinct square-free k > 0.
/// Square roots of distinct square-free integers are linearly independent
/// over Q, so the sum is zero iff every stored coefficient is zero.
class RadicalSum {
 public:
  RadicalSum() = default;

  void add(const SignedSqrtRational& term);
  /// Adds a * b exactly.
  void add_product(const SignedSqrtRational& a, const SignedSqrtRational& b);
  void add_product(const Surd& a, const Surd& b);
  void add_rational(const BigRational& r);

  bool is_zero() const { return terms_.empty(); }
  double to_double() const;
  /// "0", "1/2", "1/2*sqrt(3) - 1/1*sqrt(2)" (radicands ascending).
  std::string to_string() const;

  const std::map<BigInteger, BigRational>& terms() const { return terms_; }

 private:
  void accumulate(const BigInteger& radical, const BigRational& coeff);
  // square-free radical -> nonzero coefficient
  std::map<BigInteger, BigRational> terms_;
};

}  // namespace cgent
