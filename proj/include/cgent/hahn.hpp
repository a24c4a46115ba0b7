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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cgent/cg.hpp"
#include "cgent/exact.hpp"

namespace cgent {

/// A lower Pochhammer parameter of the series vanished before termination.
class SingularParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The label cannot be mapped onto Hahn parameters with alpha, beta > -1.
class UnsupportedLabelError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parameters of h_n^(alpha, beta)(x, N) on the lattice x = 0 .. N-1.
struct HahnParams {
  std::int64_t n = 0;
  BigRational alpha{0};
  BigRational beta{0};
  std::int64_t x = 0;
  std::int64_t N = 1;

  /// Throws DomainError unless 0 <= n <= N-1 and 0 <= x <= N-1.
  void validate() const;
};

/// Terminating 3F2(a1, a2, a3; b1, b2; 1) with a1 a nonpositive integer,
/// i.e. |a1| + 1 terms built from successive term ratios.
BigRational hyp3f2_terminating(std::int64_t a1, const BigRational& a2, const BigRational& a3,
                               const BigRational& b1, const BigRational& b2);

/// h_n = (-1)^n (N-n)_n (beta+1)_n / n! * 3F2(-n, -x, alpha+beta+n+1; beta+1, 1-N; 1)
BigRational hahn_polynomial(const HahnParams& p);

/// rho(x) = G(N+alpha-x) G(beta+1+x) / (G(x+1) G(N-x)). Every gamma argument
/// must be a positive integer; alpha, beta must exceed -1.
BigRational weight_rho(std::int64_t x, const BigRational& alpha, const BigRational& beta, std::int64_t N);

/// Squared norm d_n^2 of h_n under rho.
BigRational norm_sq(std::int64_t n, const BigRational& alpha, const BigRational& beta, std::int64_t N);

/// n = j-m, x = j2-m2, N = j1+j2-m+1, alpha = m-j1+j2, beta = m+j1-j2.
HahnParams hahn_params_for(const CouplingLabel& label);

/// True when the label maps directly to alpha > -1 and beta > -1.
bool in_hahn_domain(const CouplingLabel& label);

/// CG coefficient from (-1)^(j1-m1) <..|j m> = sqrt(rho(x)) / d_n * h_n(x).
/// Labels outside the domain are first reflected (m -> -m) with the phase
/// (-1)^(j1+j2-j); UnsupportedLabelError when the reflection does not help.
/// Labels with m != m1 + m2 or a failed triangle give exact zero.
SignedSqrtRational cg_via_hahn(const CouplingLabel& label);

struct HahnComparison {
  enum class Status { matched, reflected, mismatch, skipped };
  CouplingLabel label;
  Status status = Status::matched;
  SignedSqrtRational via_hahn;  // zero when skipped
  SignedSqrtRational via_racah;
};

struct HahnMismatch {
  CouplingLabel label;
  SignedSqrtRational via_hahn;
  SignedSqrtRational via_racah;
};

struct HahnEquivalenceReport {
  HalfInt j1, j2;
  std::size_t matched = 0;
  std::size_t reflected = 0;  // matched labels that needed the m -> -m flip
  std::vector<HahnMismatch> mismatches;
  std::vector<CouplingLabel> skipped;  // out of domain even after the flip
  std::vector<HahnComparison> comparisons;  // every label, canonical order
  bool pass() const { return mismatches.empty(); }
};

/// Compares cg_via_hahn against clebsch_gordan on every addressable label of
/// the (j1, j2) block (m = m1 + m2, triangle holds).
HahnEquivalenceReport check_hahn_equivalence(HalfInt j1, HalfInt j2);

}  // namespace cgent
