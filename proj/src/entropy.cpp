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

#include "cgent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace cgent {

std::string_view to_string(LogBase base) { return base == LogBase::natural ? "e" : "2"; }

LogBase parse_log_base(std::string_view text) {
  if (text == "e" || text == "natural") return LogBase::natural;
  if (text == "2" || text == "base2") return LogBase::base2;
  throw DomainError("unknown log base '" + std::string(text) + "' (expected e or 2)");
}

namespace {

double scale_for(LogBase base) { return base == LogBase::natural ? 1.0 : 1.0 / std::numbers::ln2; }

void require_entropic_index(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("entropic index q must be positive, got " + std::to_string(q));
}

}  // namespace

EntropyValue shannon(const ProbabilityDistribution& p, LogBase base) {
  double h = 0.0;
  for (const auto& o : p.support()) {
    const double x = to_double(o.probability);
    h -= x * std::log(x);
  }
  return {h * scale_for(base), base};
}

EntropyValue tsallis(const ProbabilityDistribution& p, double q) {
  require_entropic_index(q);
  if (q == 1.0) return shannon(p, LogBase::natural);
  // sum p^q - 1 = sum p (p^(q-1) - 1) since sum p = 1; expm1 avoids the
  // cancellation near q = 1.
  const double d = q - 1.0;
  double acc = 0.0;
  for (const auto& o : p.support()) {
    const double x = to_double(o.probability);
    acc += x * std::expm1(d * std::log(x));
  }
  return {acc / (1.0 - q), LogBase::natural};
}

double mutual_information(const JointDistribution& joint, LogBase base) {
  return shannon(marginal_first(joint), base).value + shannon(marginal_second(joint), base).value -
         shannon(joint.flattened(), base).value;
}

double subadditivity_margin(const JointDistribution& joint, LogBase base) { return mutual_information(joint, base); }

double araki_lieb_margin(const JointDistribution& joint, LogBase base) {
  const double a = shannon(marginal_first(joint), base).value;
  const double b = shannon(marginal_second(joint), base).value;
  return shannon(joint.flattened(), base).value - std::fabs(a - b);
}

double tsallis_information(const JointDistribution& joint, double q) {
  require_entropic_index(q);
  return tsallis(marginal_first(joint), q).value + tsallis(marginal_second(joint), q).value -
         tsallis(joint.flattened(), q).value;
}

double max_mutual_information(HalfInt j1, HalfInt j2, LogBase base) {
  if (!is_spin(j1) || !is_spin(j2)) throw DomainError("spin magnitudes must be nonnegative");
  const double smaller = static_cast<double>(std::min(j1.twice(), j2.twice()) + 1);
  return std::log(smaller) * scale_for(base);
}

bool ColumnInequalities::pass() const {
  if (subadditivity_margin < -kInequalityTolerance || araki_lieb_margin < -kInequalityTolerance) return false;
  return std::all_of(tsallis_margins.begin(), tsallis_margins.end(),
                     [](const TsallisMargin& t) { return t.margin >= -kInequalityTolerance; });
}

ColumnInequalities evaluate_column(const JointDistribution& joint, const std::vector<double>& q_grid,
                                   LogBase base) {
  for (double q : q_grid) require_entropic_index(q);
  const auto first = marginal_first(joint);
  const auto second = marginal_second(joint);
  const auto flat = joint.flattened();

  HalfInt j, m;
  if (joint.column()) {
    j = joint.column()->j;
    m = joint.column()->m;
  }
  ColumnInequalities rec{j, m, joint, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, {}};
  rec.entropy_first = shannon(first, base).value;
  rec.entropy_second = shannon(second, base).value;
  rec.entropy_joint = shannon(flat, base).value;
  rec.mutual_information = rec.entropy_first + rec.entropy_second - rec.entropy_joint;
  rec.subadditivity_margin = rec.mutual_information;
  rec.araki_lieb_margin = rec.entropy_joint - std::fabs(rec.entropy_first - rec.entropy_second);
  rec.tsallis_margins.reserve(q_grid.size());
  for (double q : q_grid) {
    const double margin = tsallis(first, q).value + tsallis(second, q).value - tsallis(flat, q).value;
    rec.tsallis_margins.push_back({q, margin});
  }
  return rec;
}

namespace {

void require_block(HalfInt j1, HalfInt j2, const std::vector<double>& q_grid) {
  if (!is_spin(j1) || !is_spin(j2)) throw DomainError("spin magnitudes must be nonnegative");
  for (double q : q_grid) require_entropic_index(q);
}

InequalityReport assemble(HalfInt j1, HalfInt j2, const std::vector<double>& q_grid, LogBase base,
                          std::vector<std::optional<ColumnInequalities>>& slots) {
  InequalityReport report;
  report.j1 = j1;
  report.j2 = j2;
  report.base = base;
  report.q_grid = q_grid;
  report.columns.reserve(slots.size());
  for (auto& slot : slots) {
    report.pass = report.pass && slot->pass();
    report.columns.push_back(std::move(*slot));
  }
  return report;
}

}  // namespace

InequalityReport verify_inequalities(HalfInt j1, HalfInt j2, const std::vector<double>& q_grid, LogBase base) {
  require_block(j1, j2, q_grid);
  const auto cols = coupled_states(j1, j2);
  std::vector<std::optional<ColumnInequalities>> slots(cols.size());
  const auto n = static_cast<std::ptrdiff_t>(cols.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    slots[s] = evaluate_column(column_joint(j1, j2, cols[s].j, cols[s].m), q_grid, base);
  }
  return assemble(j1, j2, q_grid, base, slots);
}

InequalityReport verify_inequalities_serial(HalfInt j1, HalfInt j2, const std::vector<double>& q_grid,
                                            LogBase base) {
  require_block(j1, j2, q_grid);
  const auto cols = coupled_states(j1, j2);
  std::vector<std::optional<ColumnInequalities>> slots(cols.size());
  for (std::size_t s = 0; s < cols.size(); ++s) {
    slots[s] = evaluate_column(column_joint(j1, j2, cols[s].j, cols[s].m), q_grid, base);
  }
  return assemble(j1, j2, q_grid, base, slots);
}

}  // namespace cgent
