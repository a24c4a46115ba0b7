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

#include "cgent/exact.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

namespace cgent {

BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const BigRational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign_of(const BigRational& r) { return sgn(r); }

namespace {

bool parse_int64(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

[[noreturn]] void bad_spin(std::string_view text) {
  throw DomainError("cannot parse half-integer '" + std::string(text) + "'");
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t value = 0;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t den = 0;
    if (!parse_int64(text.substr(0, slash), value) || !parse_int64(text.substr(slash + 1), den))
      bad_spin(text);
    if (den == 2) {
      if (value % 2 == 0 || value > kLimit || value < -kLimit) bad_spin(text);
      return from_twice(value);
    }
    if (den == 1) {
      if (value > kLimit || value < -kLimit) bad_spin(text);
      return from_integer(value);
    }
    bad_spin(text);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    std::string_view digits = negative || (!whole.empty() && whole.front() == '+') ? whole.substr(1) : whole;
    if (digits.empty()) digits = "0";
    if (!parse_int64(digits, value) || value < 0 || value > kLimit) bad_spin(text);
    // Fractional part must be all zeros or 5 followed by zeros.
    bool half = false;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      char c = frac[i];
      if (i == 0 && c == '5') {
        half = true;
      } else if (c != '0') {
        bad_spin(text);
      }
    }
    std::int64_t twice = 2 * value + (half ? 1 : 0);
    return from_twice(negative ? -twice : twice);
  }

  if (!parse_int64(text, value) || value > kLimit || value < -kLimit) bad_spin(text);
  return from_integer(value);
}

std::int64_t HalfInt::as_integer() const {
  if (!is_integer()) throw DomainError("half-integer " + to_string() + " used where an integer is required");
  return twice_ / 2;
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

bool is_spin(HalfInt j) { return j.twice() >= 0; }

bool is_spin_pair(HalfInt j, HalfInt m) {
  return is_spin(j) && abs(m) <= j && (j - m).is_integer();
}

void require_spin_pair(HalfInt j, HalfInt m, std::string_view what) {
  if (!is_spin_pair(j, m)) {
    throw DomainError("invalid (j, m) pair " + std::string(what) + " = (" + j.to_string() + ", " +
                      m.to_string() + ")");
  }
}

SignedSqrtRational::SignedSqrtRational(int sign, BigRational radicand) : radicand_(std::move(radicand)) {
  if (sgn(radicand_) < 0) throw DomainError("negative radicand " + to_fraction_string(radicand_));
  sign_ = radicand_ == 0 ? 0 : (sign > 0 ? 1 : (sign < 0 ? -1 : 0));
  if (sign_ == 0) radicand_ = 0;
}

SignedSqrtRational SignedSqrtRational::from_rational(const BigRational& value) {
  return {sgn(value), value * value};
}

SignedSqrtRational SignedSqrtRational::operator-() const { return {-sign_, radicand_}; }

SignedSqrtRational SignedSqrtRational::operator*(const SignedSqrtRational& o) const {
  return {sign_ * o.sign_, radicand_ * o.radicand_};
}

std::string SignedSqrtRational::to_string() const {
  if (sign_ == 0) return "0";
  return std::string(sign_ > 0 ? "+" : "-") + "sqrt(" + to_fraction_string(radicand_) + ")";
}

double to_double(const BigRational& r) { return r.get_d(); }

double ssr_to_float(const SignedSqrtRational& v) {
  if (v.is_zero()) return 0.0;
  return v.sign() * std::sqrt(v.radicand().get_d());
}

BigInteger factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of negative number " + std::to_string(n));
  BigInteger result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigRational pochhammer(const BigRational& x, std::int64_t k) {
  if (k < 0) throw DomainError("pochhammer with negative length " + std::to_string(k));
  BigRational result(1);
  BigRational factor = x;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= factor;
    if (result == 0) break;
    factor += 1;
  }
  return result;
}

BigInteger squarefree_part(const BigInteger& n) {
  if (n <= 0) throw DomainError("square-free part of non-positive integer");
  BigInteger rest = n;
  BigInteger kernel = 1;
  for (unsigned long p = 2;; p += (p == 2 ? 1 : 2)) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) return kernel;
    BigInteger cube = BigInteger(p) * p * p;
    if (cube > rest) break;
    int exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    if (exponent % 2 == 1) kernel *= p;
  }
  // All prime factors of `rest` exceed the cube root, so it is a prime or a
  // product of two distinct primes; squares were handled above.
  return kernel * rest;
}

Surd to_surd(const SignedSqrtRational& v) {
  if (v.is_zero()) return {BigRational(0), BigInteger(1)};
  // sqrt(a/b) = sqrt(a*b)/b, a*b = k*s^2
  const BigInteger& a = v.radicand().get_num();
  const BigInteger& b = v.radicand().get_den();
  BigInteger ab = a * b;
  BigInteger k = squarefree_part(ab);
  BigInteger s2 = ab / k;
  BigInteger s;
  mpz_sqrt(s.get_mpz_t(), s2.get_mpz_t());
  return {make_rational(v.sign() * s, b), k};
}

void RadicalSum::accumulate(const BigInteger& radical, const BigRational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(radical, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void RadicalSum::add(const SignedSqrtRational& term) {
  if (term.is_zero()) return;
  Surd s = to_surd(term);
  accumulate(s.radical, s.coeff);
}

void RadicalSum::add_product(const SignedSqrtRational& a, const SignedSqrtRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  add_product(to_surd(a), to_surd(b));
}

void RadicalSum::add_product(const Surd& x, const Surd& y) {
  if (x.coeff == 0 || y.coeff == 0) return;
  BigInteger g;
  mpz_gcd(g.get_mpz_t(), x.radical.get_mpz_t(), y.radical.get_mpz_t());
  BigInteger radical = (x.radical / g) * (y.radical / g);
  accumulate(radical, x.coeff * y.coeff * g);
}

void RadicalSum::add_rational(const BigRational& r) { accumulate(BigInteger(1), r); }

double RadicalSum::to_double() const {
  double total = 0.0;
  for (const auto& [radical, coeff] : terms_) total += coeff.get_d() * std::sqrt(radical.get_d());
  return total;
}

std::string RadicalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [radical, coeff] : terms_) {
    BigRational magnitude = ::abs(coeff);
    if (out.empty()) {
      if (sgn(coeff) < 0) out += "-";
    } else {
      out += sgn(coeff) < 0 ? " - " : " + ";
    }
    out += to_fraction_string(magnitude);
    if (radical != 1) out += "*sqrt(" + radical.get_str() + ")";
  }
  return out;
}

}  // namespace cgent
