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

#include "cgent/hahn.hpp"

#include <string>

namespace cgent {

void HahnParams::validate() const {
  if (N < 1) throw DomainError("Hahn lattice size N must be positive, got " + std::to_string(N));
  if (n < 0 || n > N - 1) throw DomainError("Hahn degree n = " + std::to_string(n) + " outside [0, N-1]");
  if (x < 0 || x > N - 1) throw DomainError("Hahn argument x = " + std::to_string(x) + " outside [0, N-1]");
}

BigRational hyp3f2_terminating(std::int64_t a1, const BigRational& a2, const BigRational& a3,
                               const BigRational& b1, const BigRational& b2) {
  if (a1 > 0) throw DomainError("terminating 3F2 needs a nonpositive first numerator parameter");
  const std::int64_t terms = -a1;
  for (std::int64_t k = 0; k < terms; ++k) {
    if (b1 + k == 0 || b2 + k == 0) {
      throw SingularParameterError("3F2 lower parameter Pochhammer vanishes at k = " + std::to_string(k + 1));
    }
  }

  BigRational sum(1);
  BigRational term(1);
  for (std::int64_t k = 0; k < terms; ++k) {
    term *= BigRational(a1 + k) * (a2 + k) * (a3 + k);
    if (term == 0) break;
    term /= (b1 + k) * (b2 + k) * (k + 1);
    sum += term;
  }
  return sum;
}

BigRational hahn_polynomial(const HahnParams& p) {
  p.validate();
  const BigRational prefactor = pochhammer(BigRational(p.N - p.n), p.n) * pochhammer(p.beta + 1, p.n) /
                                BigRational(factorial(p.n));
  const BigRational series = hyp3f2_terminating(-p.n, BigRational(-p.x), p.alpha + p.beta + p.n + 1, p.beta + 1,
                                                BigRational(1 - p.N));
  return (p.n % 2 == 0 ? prefactor : -prefactor) * series;
}

namespace {

/// Gamma restricted to positive integer arguments.
BigInteger gamma_integral(const BigRational& arg) {
  if (arg.get_den() != 1 || arg <= 0) {
    throw DomainError("gamma argument " + to_fraction_string(arg) + " is not a positive integer");
  }
  return factorial(arg.get_num().get_si() - 1);
}

void require_weight_domain(const BigRational& alpha, const BigRational& beta) {
  if (alpha <= -1 || beta <= -1) {
    throw DomainError("Hahn weight needs alpha > -1 and beta > -1, got alpha = " + to_fraction_string(alpha) +
                      ", beta = " + to_fraction_string(beta));
  }
}

}  // namespace

BigRational weight_rho(std::int64_t x, const BigRational& alpha, const BigRational& beta, std::int64_t N) {
  require_weight_domain(alpha, beta);
  BigInteger num = gamma_integral(alpha + N - x) * gamma_integral(beta + 1 + x);
  BigInteger den = gamma_integral(BigRational(x + 1)) * gamma_integral(BigRational(N - x));
  return make_rational(num, den);
}

BigRational norm_sq(std::int64_t n, const BigRational& alpha, const BigRational& beta, std::int64_t N) {
  require_weight_domain(alpha, beta);
  if (n < 0 || n > N - 1) throw DomainError("norm_sq needs 0 <= n <= N-1");
  const BigRational ab = alpha + beta;
  BigRational num(gamma_integral(alpha + n + 1) * gamma_integral(beta + n + 1) * gamma_integral(ab + n + N + 1));
  BigRational den = (ab + 2 * n + 1) * BigRational(factorial(n) * factorial(N - n - 1)) *
                    BigRational(gamma_integral(ab + n + 1));
  return num / den;
}

HahnParams hahn_params_for(const CouplingLabel& label) {
  HahnParams p;
  p.n = (label.j - label.m).as_integer();
  p.x = (label.j2 - label.m2).as_integer();
  p.N = (label.j1 + label.j2 - label.m).as_integer() + 1;
  p.alpha = (label.m - label.j1 + label.j2).as_rational();
  p.beta = (label.m + label.j1 - label.j2).as_rational();
  return p;
}

bool in_hahn_domain(const CouplingLabel& label) {
  const HalfInt alpha = label.m - label.j1 + label.j2;
  const HalfInt beta = label.m + label.j1 - label.j2;
  const HalfInt minus_one = HalfInt::from_integer(-1);
  return alpha > minus_one && beta > minus_one;
}

namespace {

SignedSqrtRational represent_direct(const CouplingLabel& label) {
  const HahnParams p = hahn_params_for(label);
  const BigRational h = hahn_polynomial(p);
  const BigRational squared = weight_rho(p.x, p.alpha, p.beta, p.N) * h * h / norm_sq(p.n, p.alpha, p.beta, p.N);
  const int phase = (label.j1 - label.m1).as_integer() % 2 == 0 ? 1 : -1;
  return {phase * sgn(h), squared};
}

bool addressable(const CouplingLabel& label) {
  return label.m == label.m1 + label.m2 && triangle_holds(label.j1, label.j2, label.j);
}

}  // namespace

SignedSqrtRational cg_via_hahn(const CouplingLabel& label) {
  label.validate();
  if (!addressable(label)) return SignedSqrtRational::zero();
  if (in_hahn_domain(label)) return represent_direct(label);

  const CouplingLabel flipped = label.reflected();
  if (!in_hahn_domain(flipped)) {
    throw UnsupportedLabelError("label " + label.to_string() +
                                " maps outside alpha, beta > -1 even after m -> -m reflection");
  }
  SignedSqrtRational value = represent_direct(flipped);
  return (label.j1 + label.j2 - label.j).as_integer() % 2 == 0 ? value : -value;
}

HahnEquivalenceReport check_hahn_equivalence(HalfInt j1, HalfInt j2) {
  if (!is_spin(j1) || !is_spin(j2)) throw DomainError("check_hahn_equivalence needs spin magnitudes");
  HahnEquivalenceReport report;
  report.j1 = j1;
  report.j2 = j2;
  for (const TotalState& col : coupled_states(j1, j2)) {
    for (const ProductState& row : product_states(j1, j2)) {
      if (row.m1 + row.m2 != col.m) continue;
      const CouplingLabel label{j1, row.m1, j2, row.m2, col.j, col.m};
      const SignedSqrtRational racah = clebsch_gordan(label);
      SignedSqrtRational hahn;
      try {
        hahn = cg_via_hahn(label);
      } catch (const UnsupportedLabelError&) {
        report.skipped.push_back(label);
        report.comparisons.push_back({label, HahnComparison::Status::skipped, {}, racah});
        continue;
      }
      if (hahn == racah) {
        ++report.matched;
        const bool flipped = !in_hahn_domain(label);
        if (flipped) ++report.reflected;
        report.comparisons.push_back(
            {label, flipped ? HahnComparison::Status::reflected : HahnComparison::Status::matched, hahn, racah});
      } else {
        report.mismatches.push_back({label, hahn, racah});
        report.comparisons.push_back({label, HahnComparison::Status::mismatch, hahn, racah});
      }
    }
  }
  return report;
}

}  // namespace cgent
