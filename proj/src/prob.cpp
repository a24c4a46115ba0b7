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

#include "cgent/prob.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace cgent {

BistochasticMatrix::BistochasticMatrix(HalfInt j1, HalfInt j2, std::vector<BigRational> entries)
    : j1_(j1), j2_(j2), rows_(product_states(j1, j2)), cols_(coupled_states(j1, j2)), entries_(std::move(entries)) {
  const std::size_t n = rows_.size();
  if (cols_.size() != n || entries_.size() != n * n) {
    throw std::invalid_argument("bistochastic matrix needs an N x N entry array");
  }
  for (std::size_t r = 0; r < n; ++r) {
    BigRational row_sum(0);
    BigRational col_sum(0);
    for (std::size_t s = 0; s < n; ++s) {
      if (sgn((*this)(r, s)) < 0) throw std::logic_error("negative entry in bistochastic matrix");
      row_sum += (*this)(r, s);
      col_sum += (*this)(s, r);
    }
    if (row_sum != 1) throw std::logic_error("row " + std::to_string(r) + " does not sum to 1");
    if (col_sum != 1) throw std::logic_error("column " + std::to_string(r) + " does not sum to 1");
  }
}

std::optional<std::size_t> BistochasticMatrix::row_index(HalfInt m1, HalfInt m2) const {
  if (!is_spin_pair(j1_, m1) || !is_spin_pair(j2_, m2)) return std::nullopt;
  // Descending lexicographic order is a mixed-radix count from the top.
  const auto a = static_cast<std::size_t>((j1_ - m1).as_integer());
  const auto b = static_cast<std::size_t>((j2_ - m2).as_integer());
  return a * static_cast<std::size_t>(j2_.twice() + 1) + b;
}

std::optional<std::size_t> BistochasticMatrix::col_index(HalfInt j, HalfInt m) const {
  auto it = std::find(cols_.begin(), cols_.end(), TotalState{j, m});
  if (it == cols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - cols_.begin());
}

CouplingLabel BistochasticMatrix::label(std::size_t r, std::size_t s) const {
  return {j1_, rows_.at(r).m1, j2_, rows_.at(r).m2, cols_.at(s).j, cols_.at(s).m};
}

namespace {

void require_spins(HalfInt j1, HalfInt j2) {
  if (!is_spin(j1) || !is_spin(j2)) throw DomainError("spin magnitudes must be nonnegative");
}

void fill_column(HalfInt j1, HalfInt j2, const std::vector<ProductState>& rows, const TotalState& col,
                 std::size_t s, std::vector<BigRational>& entries) {
  const std::size_t n = rows.size();
  for (std::size_t r = 0; r < n; ++r) {
    entries[r * n + s] = clebsch_gordan({j1, rows[r].m1, j2, rows[r].m2, col.j, col.m}).squared();
  }
}

}  // namespace

BistochasticMatrix build_bistochastic(HalfInt j1, HalfInt j2) {
  require_spins(j1, j2);
  const auto rows = product_states(j1, j2);
  const auto cols = coupled_states(j1, j2);
  const auto n = static_cast<std::ptrdiff_t>(rows.size());
  std::vector<BigRational> entries(rows.size() * rows.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    fill_column(j1, j2, rows, cols[s], static_cast<std::size_t>(s), entries);
  }
  return BistochasticMatrix(j1, j2, std::move(entries));
}

BistochasticMatrix build_bistochastic_serial(HalfInt j1, HalfInt j2) {
  require_spins(j1, j2);
  const auto rows = product_states(j1, j2);
  const auto cols = coupled_states(j1, j2);
  std::vector<BigRational> entries(rows.size() * rows.size());
  for (std::size_t s = 0; s < cols.size(); ++s) fill_column(j1, j2, rows, cols[s], s, entries);
  return BistochasticMatrix(j1, j2, std::move(entries));
}

ProbabilityDistribution::ProbabilityDistribution(std::vector<Outcome> outcomes) {
  BigRational total(0);
  for (auto& o : outcomes) {
    if (sgn(o.probability) < 0) throw DomainError("negative probability " + to_fraction_string(o.probability));
    total += o.probability;
    if (o.probability != 0) support_.push_back(std::move(o));
  }
  if (total != 1) throw DomainError("probabilities sum to " + to_fraction_string(total) + ", not 1");
}

ProbabilityDistribution ProbabilityDistribution::from_probabilities(const std::vector<BigRational>& probabilities) {
  std::vector<Outcome> outcomes;
  outcomes.reserve(probabilities.size());
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    outcomes.push_back({HalfInt::from_integer(static_cast<std::int64_t>(i)), probabilities[i]});
  }
  return ProbabilityDistribution(std::move(outcomes));
}

JointDistribution::JointDistribution(std::vector<JointOutcome> outcomes, std::optional<Column> column)
    : column_(std::move(column)) {
  BigRational total(0);
  for (auto& o : outcomes) {
    if (sgn(o.probability) < 0) throw DomainError("negative joint probability");
    total += o.probability;
    if (o.probability == 0) continue;
    if (column_ && o.m1 + o.m2 != column_->m) throw std::logic_error("column joint support off the m1 + m2 = m line");
    support_.push_back(std::move(o));
  }
  if (total != 1) throw DomainError("joint probabilities sum to " + to_fraction_string(total) + ", not 1");
}

JointDistribution JointDistribution::synthetic(std::vector<JointOutcome> outcomes) {
  return JointDistribution(std::move(outcomes), std::nullopt);
}

ProbabilityDistribution JointDistribution::flattened() const {
  std::vector<BigRational> p;
  p.reserve(support_.size());
  for (const auto& o : support_) p.push_back(o.probability);
  return ProbabilityDistribution::from_probabilities(p);
}

JointDistribution column_joint(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m) {
  require_spins(j1, j2);
  if (!triangle_holds(j1, j2, j) || !is_spin_pair(j, m)) {
    throw DomainError("(j, m) = (" + j.to_string() + ", " + m.to_string() + ") is not a column of the (" +
                      j1.to_string() + ", " + j2.to_string() + ") block");
  }
  std::vector<JointOutcome> outcomes;
  for (const ProductState& row : product_states(j1, j2)) {
    SignedSqrtRational c = clebsch_gordan({j1, row.m1, j2, row.m2, j, m});
    if (!c.is_zero()) outcomes.push_back({row.m1, row.m2, c.squared()});
  }
  return JointDistribution(std::move(outcomes), JointDistribution::Column{j1, j2, j, m});
}

namespace {

template <typename Key>
ProbabilityDistribution marginal(const JointDistribution& joint, Key key) {
  std::map<HalfInt, BigRational, std::greater<>> mass;
  for (const auto& o : joint.support()) mass[key(o)] += o.probability;
  std::vector<ProbabilityDistribution::Outcome> outcomes;
  outcomes.reserve(mass.size());
  for (auto& [label, p] : mass) outcomes.push_back({label, p});
  return ProbabilityDistribution(std::move(outcomes));
}

}  // namespace

ProbabilityDistribution marginal_first(const JointDistribution& joint) {
  return marginal(joint, [](const JointOutcome& o) { return o.m1; });
}

ProbabilityDistribution marginal_second(const JointDistribution& joint) {
  return marginal(joint, [](const JointOutcome& o) { return o.m2; });
}

}  // namespace cgent
