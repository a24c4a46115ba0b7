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
#include <optional>
#include <vector>

#include "cgent/cg.hpp"
#include "cgent/exact.hpp"

namespace cgent {

/// Elementwise square of the orthogonal CG matrix of a (j1, j2) block.
///
/// Rows r <-> (m1, m2) in lexicographic descending order; columns
/// s <-> (j, m) with j descending from j1+j2 to |j1-j2| and m descending
/// within each j. Zero entries are kept so every row and column is complete.
/// Nonnegativity and exact unit row/column sums are checked on construction.
class BistochasticMatrix {
 public:
  BistochasticMatrix(HalfInt j1, HalfInt j2, std::vector<BigRational> entries);

  HalfInt j1() const { return j1_; }
  HalfInt j2() const { return j2_; }
  std::size_t size() const { return rows_.size(); }

  const BigRational& operator()(std::size_t r, std::size_t s) const { return entries_[r * size() + s]; }

  const std::vector<ProductState>& rows() const { return rows_; }
  const std::vector<TotalState>& cols() const { return cols_; }

  std::optional<std::size_t> row_index(HalfInt m1, HalfInt m2) const;
  std::optional<std::size_t> col_index(HalfInt j, HalfInt m) const;

  CouplingLabel label(std::size_t r, std::size_t s) const;

  friend bool operator==(const BistochasticMatrix& a, const BistochasticMatrix& b) {
    return a.j1_ == b.j1_ && a.j2_ == b.j2_ && a.entries_ == b.entries_;
  }

 private:
  HalfInt j1_, j2_;
  std::vector<ProductState> rows_;
  std::vector<TotalState> cols_;
  std::vector<BigRational> entries_;  // row-major
};

/// Columns are evaluated concurrently with OpenMP.
BistochasticMatrix build_bistochastic(HalfInt j1, HalfInt j2);
/// Single-threaded reference for build_bistochastic.
BistochasticMatrix build_bistochastic_serial(HalfInt j1, HalfInt j2);

/// Exact distribution over labelled outcomes; zero-probability outcomes are
/// dropped, probabilities are nonnegative and sum to exactly 1.
class ProbabilityDistribution {
 public:
  struct Outcome {
    HalfInt label;
    BigRational probability;
  };

  /// Throws DomainError on negative probabilities or a total other than 1.
  explicit ProbabilityDistribution(std::vector<Outcome> outcomes);
  /// Outcomes labelled 0, 1, 2, ...
  static ProbabilityDistribution from_probabilities(const std::vector<BigRational>& probabilities);

  const std::vector<Outcome>& support() const { return support_; }

 private:
  std::vector<Outcome> support_;
};

struct JointOutcome {
  HalfInt m1, m2;
  BigRational probability;
};

/// Distribution over (m1, m2) pairs. A CG column joint records its (j, m)
/// and has all support on m1 + m2 = m; synthetic joints have no column.
class JointDistribution {
 public:
  struct Column {
    HalfInt j1, j2, j, m;
  };

  /// Any valid joint, e.g. a product distribution for tests.
  static JointDistribution synthetic(std::vector<JointOutcome> outcomes);

  const std::vector<JointOutcome>& support() const { return support_; }
  const std::optional<Column>& column() const { return column_; }

  /// The joint itself as a flat distribution (labels are support positions).
  ProbabilityDistribution flattened() const;

 private:
  friend JointDistribution column_joint(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m);
  explicit JointDistribution(std::vector<JointOutcome> outcomes, std::optional<Column> column);

  std::vector<JointOutcome> support_;
  std::optional<Column> column_;
};

/// p(m1, m2) = <j1 m1 j2 m2 | j m>^2 over all (m1, m2), zeros omitted.
/// DomainError unless the triangle holds and (j, m) is a valid pair.
JointDistribution column_joint(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m);

/// Marginal over m1, labels descending.
ProbabilityDistribution marginal_first(const JointDistribution& joint);
/// Marginal over m2, labels descending.
ProbabilityDistribution marginal_second(const JointDistribution& joint);

}  // namespace cgent
