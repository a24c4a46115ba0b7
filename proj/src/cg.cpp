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

#include "cgent/cg.hpp"

#include <algorithm>
#include <cmath>

namespace cgent {

void CouplingLabel::validate() const {
  require_spin_pair(j1, m1, "(j1, m1)");
  require_spin_pair(j2, m2, "(j2, m2)");
  require_spin_pair(j, m, "(j, m)");
}

std::string CouplingLabel::to_string() const {
  return "<" + j1.to_string() + " " + m1.to_string() + " " + j2.to_string() + " " + m2.to_string() + " | " +
         j.to_string() + " " + m.to_string() + ">";
}

bool triangle_holds(HalfInt j1, HalfInt j2, HalfInt j) {
  return abs(j1 - j2) <= j && j <= j1 + j2 && (j1 + j2 + j).is_integer();
}

namespace {

int parity_sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

SignedSqrtRational three_j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  require_spin_pair(j1, m1, "(j1, m1)");
  require_spin_pair(j2, m2, "(j2, m2)");
  require_spin_pair(j3, m3, "(j3, m3)");
  if ((m1 + m2 + m3).twice() != 0) return SignedSqrtRational::zero();
  if (!triangle_holds(j1, j2, j3)) return SignedSqrtRational::zero();

  const std::int64_t a = (j1 + j2 - j3).as_integer();
  const std::int64_t b = (j1 - j2 + j3).as_integer();
  const std::int64_t c = (-j1 + j2 + j3).as_integer();
  const std::int64_t total = (j1 + j2 + j3).as_integer() + 1;

  const std::int64_t j1_minus_m1 = (j1 - m1).as_integer();
  const std::int64_t j2_plus_m2 = (j2 + m2).as_integer();
  const std::int64_t shift_a = (j3 - j2 + m1).as_integer();
  const std::int64_t shift_b = (j3 - j1 - m2).as_integer();

  const std::int64_t z_min = std::max<std::int64_t>({0, -shift_a, -shift_b});
  const std::int64_t z_max = std::min({a, j1_minus_m1, j2_plus_m2});

  BigRational sum(0);
  for (std::int64_t z = z_min; z <= z_max; ++z) {
    BigInteger den = factorial(z) * factorial(a - z) * factorial(j1_minus_m1 - z) * factorial(j2_plus_m2 - z) *
                     factorial(shift_a + z) * factorial(shift_b + z);
    sum += make_rational(parity_sign(z), den);
  }
  if (sum == 0) return SignedSqrtRational::zero();

  BigRational prefactor = make_rational(factorial(a) * factorial(b) * factorial(c), factorial(total));
  prefactor *= BigRational(factorial((j1 + m1).as_integer()) * factorial(j1_minus_m1) *
                           factorial(j2_plus_m2) * factorial((j2 - m2).as_integer()) *
                           factorial((j3 + m3).as_integer()) * factorial((j3 - m3).as_integer()));

  const int phase = parity_sign((j1 - j2 - m3).as_integer());
  return {phase * sgn(sum), prefactor * sum * sum};
}

SignedSqrtRational clebsch_gordan(const CouplingLabel& label) {
  label.validate();
  if (label.m != label.m1 + label.m2) return SignedSqrtRational::zero();
  if (!triangle_holds(label.j1, label.j2, label.j)) return SignedSqrtRational::zero();
  SignedSqrtRational symbol = three_j(label.j1, label.j2, label.j, label.m1, label.m2, -label.m);
  const int phase = parity_sign((label.j1 - label.j2 + label.m).as_integer());
  const BigRational multiplicity(label.j.twice() + 1);
  return {phase * symbol.sign(), symbol.radicand() * multiplicity};
}

std::vector<TotalState> coupled_states(HalfInt j1, HalfInt j2) {
  std::vector<TotalState> states;
  const HalfInt one = HalfInt::from_integer(1);
  for (HalfInt j = j1 + j2; j >= abs(j1 - j2); j -= one) {
    for (HalfInt m = j; m >= -j; m -= one) states.push_back({j, m});
  }
  return states;
}

std::vector<ProductState> product_states(HalfInt j1, HalfInt j2) {
  std::vector<ProductState> states;
  const HalfInt one = HalfInt::from_integer(1);
  for (HalfInt m1 = j1; m1 >= -j1; m1 -= one) {
    for (HalfInt m2 = j2; m2 >= -j2; m2 -= one) states.push_back({m1, m2});
  }
  return states;
}

namespace {

std::string column_name(const TotalState& s) { return "(j=" + s.j.to_string() + ", m=" + s.m.to_string() + ")"; }
std::string row_name(const ProductState& s) {
  return "(m1=" + s.m1.to_string() + ", m2=" + s.m2.to_string() + ")";
}

}  // namespace

OrthogonalityReport verify_orthogonality(HalfInt j1, HalfInt j2) {
  if (!is_spin(j1) || !is_spin(j2)) throw DomainError("verify_orthogonality needs spin magnitudes");
  OrthogonalityReport report;
  report.j1 = j1;
  report.j2 = j2;

  const auto rows = product_states(j1, j2);
  const auto cols = coupled_states(j1, j2);
  std::vector<std::vector<Surd>> u(rows.size(), std::vector<Surd>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t s = 0; s < cols.size(); ++s) {
      u[r][s] = to_surd(clebsch_gordan({j1, rows[r].m1, j2, rows[r].m2, cols[s].j, cols[s].m}));
    }
  }

  double worst = 0.0;
  auto record = [&](std::string relation, std::string left, std::string right, RadicalSum residual) {
    ++report.sums_checked;
    if (residual.is_zero()) return;
    report.pass = false;
    double magnitude = std::fabs(residual.to_double());
    if (magnitude >= worst || report.worst_residual.is_zero()) {
      worst = magnitude;
      report.worst_residual = residual;
    }
    report.violations.push_back({std::move(relation), std::move(left), std::move(right), std::move(residual)});
  };

  for (std::size_t s = 0; s < cols.size(); ++s) {
    for (std::size_t t = 0; t < cols.size(); ++t) {
      RadicalSum residual;
      for (std::size_t r = 0; r < rows.size(); ++r) residual.add_product(u[r][s], u[r][t]);
      if (s == t) residual.add_rational(-1);
      record("columns", column_name(cols[s]), column_name(cols[t]), std::move(residual));
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t q = 0; q < rows.size(); ++q) {
      RadicalSum residual;
      for (std::size_t s = 0; s < cols.size(); ++s) residual.add_product(u[r][s], u[q][s]);
      if (r == q) residual.add_rational(-1);
      record("rows", row_name(rows[r]), row_name(rows[q]), std::move(residual));
    }
  }
  return report;
}

}  // namespace cgent
