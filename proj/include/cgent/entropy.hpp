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

#include <string_view>
#include <vector>

#include "cgent/prob.hpp"

namespace cgent {

enum class LogBase { natural, base2 };

/// "e" or "2".
std::string_view to_string(LogBase base);
/// Accepts "e", "natural", "2", "base2".
LogBase parse_log_base(std::string_view text);

struct EntropyValue {
  double value = 0.0;
  LogBase base = LogBase::natural;
};

/// Margins at or above -kInequalityTolerance count as satisfied. Entropies
/// are floats of exact probabilities, so this only absorbs roundoff.
inline constexpr double kInequalityTolerance = 1e-12;

/// H = -sum p log p with 0 log 0 = 0.
EntropyValue shannon(const ProbabilityDistribution& p, LogBase base = LogBase::natural);

/// T_q = (sum p^q - 1) / (1 - q); q = 1 is the natural-log Shannon limit.
/// DomainError unless q > 0.
EntropyValue tsallis(const ProbabilityDistribution& p, double q);

/// I = H(A) + H(B) - H(AB) over the two marginals of the joint.
double mutual_information(const JointDistribution& joint, LogBase base = LogBase::natural);
/// H(A) + H(B) - H(AB); subadditivity holds when this is >= 0.
double subadditivity_margin(const JointDistribution& joint, LogBase base = LogBase::natural);
/// H(AB) - |H(A) - H(B)|.
double araki_lieb_margin(const JointDistribution& joint, LogBase base = LogBase::natural);
/// I_q = T_q(A) + T_q(B) - T_q(AB).
double tsallis_information(const JointDistribution& joint, double q);

/// Uniform-marginal bound min{log(2 j1 + 1), log(2 j2 + 1)}.
double max_mutual_information(HalfInt j1, HalfInt j2, LogBase base = LogBase::natural);

struct TsallisMargin {
  double q = 1.0;
  double margin = 0.0;
};

struct ColumnInequalities {
  HalfInt j, m;
  JointDistribution joint;
  double entropy_first = 0.0;   // H(A), over m1
  double entropy_second = 0.0;  // H(B), over m2
  double entropy_joint = 0.0;   // H(AB)
  double mutual_information = 0.0;
  double subadditivity_margin = 0.0;
  double araki_lieb_margin = 0.0;
  std::vector<TsallisMargin> tsallis_margins;

  bool pass() const;
};

struct InequalityReport {
  HalfInt j1, j2;
  LogBase base = LogBase::natural;
  std::vector<double> q_grid;
  std::vector<ColumnInequalities> columns;  // canonical column order
  bool pass = true;
};

/// Evaluates every inequality on one column joint.
ColumnInequalities evaluate_column(const JointDistribution& joint, const std::vector<double>& q_grid,
                                   LogBase base);

/// Every column of the (j1, j2) block; columns are evaluated concurrently and
/// assembled in canonical order.
InequalityReport verify_inequalities(HalfInt j1, HalfInt j2, const std::vector<double>& q_grid,
                                     LogBase base = LogBase::natural);
/// Single-threaded reference for verify_inequalities.
InequalityReport verify_inequalities_serial(HalfInt j1, HalfInt j2, const std::vector<double>& q_grid,
                                            LogBase base = LogBase::natural);

}  // namespace cgent
