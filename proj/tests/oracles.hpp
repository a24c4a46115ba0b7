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

// Test-only reference values that do not go through the library's Racah sum.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "cgent/exact.hpp"

namespace cgent::testing {

inline BigInteger binomial(std::int64_t n, std::int64_t k) {
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// |<j1 m1 j2 m2 | j1+j2, m>|^2 = C(2j1, j1-m1) C(2j2, j2-m2) / C(2j1+2j2, j1+j2-m)
/// (projection of the fully symmetric stretched multiplet).
inline BigRational stretched_cg_squared(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
  const HalfInt j = j1 + j2;
  const HalfInt m = m1 + m2;
  return make_rational(binomial(j1.twice(), (j1 - m1).as_integer()) * binomial(j2.twice(), (j2 - m2).as_integer()),
                       binomial(j.twice(), (j - m).as_integer()));
}

/// (j j 0; m -m 0) = (-1)^(j-m) / sqrt(2j+1).
inline SignedSqrtRational three_j_zero_coupling(HalfInt j, HalfInt m) {
  const int sign = (j - m).as_integer() % 2 == 0 ? 1 : -1;
  return {sign, make_rational(1, j.twice() + 1)};
}

/// Shannon entropy in long double from plain doubles, natural log.
inline double brute_shannon(const std::vector<double>& p) {
  long double h = 0.0L;
  for (double x : p) {
    if (x > 0.0) h -= static_cast<long double>(x) * std::log(static_cast<long double>(x));
  }
  return static_cast<double>(h);
}

/// Tsallis entropy by the literal (sum p^q - 1) / (1 - q), long double.
inline double brute_tsallis(const std::vector<double>& p, double q) {
  long double s = 0.0L;
  for (double x : p) {
    if (x > 0.0) s += std::pow(static_cast<long double>(x), static_cast<long double>(q));
  }
  return static_cast<double>((s - 1.0L) / (1.0L - q));
}

inline HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }

}  // namespace cgent::testing
