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
#include <string>
#include <vector>

#include "cgent/exact.hpp"

namespace cgent {

/// Index of one coefficient <j1 m1 j2 m2 | j m>.
struct CouplingLabel {
  HalfInt j1, m1, j2, m2, j, m;

  /// Throws DomainError unless every (j, m) pair is valid.
  void validate() const;
  /// The flipped label <j1 -m1 j2 -m2 | j -m>.
  CouplingLabel reflected() const { return {j1, -m1, j2, -m2, j, -m}; }
  std::string to_string() const;

  friend bool operator==(const CouplingLabel&, const CouplingLabel&) = default;
};

/// |j1 - j2| <= j <= j1 + j2 and j1 + j2 + j integral.
bool triangle_holds(HalfInt j1, HalfInt j2, HalfInt j);

/// Wigner 3-j symbol (j1 j2 j3; m1 m2 m3) evaluated exactly from the Racah
/// sum. The square-root prefactor stays a radicand and the z-sum is an exact
/// rational s, so the result is sign(s) * (-1)^(j1-j2-m3) * sqrt(prefactor * s^2).
///
/// Exact zero when m1 + m2 + m3 != 0 or the triangle fails; DomainError for a
/// malformed (j, m) pair.
SignedSqrtRational three_j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

/// <j1 m1 j2 m2 | j m> = (-1)^(j1-j2+m) sqrt(2j+1) (j1 j2 j; m1 m2 -m).
SignedSqrtRational clebsch_gordan(const CouplingLabel& label);

/// All (j, m) columns of the (j1, j2) block: j from j1+j2 down to |j1-j2|,
/// m descending within each j.
struct TotalState {
  HalfInt j, m;
  friend bool operator==(const TotalState&, const TotalState&) = default;
};
std::vector<TotalState> coupled_states(HalfInt j1, HalfInt j2);

/// All (m1, m2) rows of the (j1, j2) block in lexicographic descending order.
struct ProductState {
  HalfInt m1, m2;
  friend bool operator==(const ProductState&, const ProductState&) = default;
};
std::vector<ProductState> product_states(HalfInt j1, HalfInt j2);

struct OrthogonalityViolation {
  std::string relation;  // "columns" or "rows"
  std::string left;
  std::string right;
  RadicalSum residual;
};

struct OrthogonalityReport {
  HalfInt j1, j2;
  bool pass = true;
  std::size_t sums_checked = 0;
  /// Largest-magnitude residual seen; exactly zero when pass is true.
  RadicalSum worst_residual;
  std::vector<OrthogonalityViolation> violations;
};

/// Checks both completeness relations over the whole (j1, j2) block:
///   sum_{m1 m2} <..|j m><..|j' m'> = delta_jj' delta_mm'
///   sum_{j m}   <m1 m2|..><m1' m2'|..> = delta_m1m1' delta_m2m2'
/// Residuals are exact, so pass means every residual is identically zero.
OrthogonalityReport verify_orthogonality(HalfInt j1, HalfInt j2);

}  // namespace cgent
