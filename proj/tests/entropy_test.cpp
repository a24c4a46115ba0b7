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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cgent/entropy.hpp"
#include "oracles.hpp"

namespace cgent {
namespace {

using testing::h;

ProbabilityDistribution dist(std::initializer_list<std::pair<long, long>> p) {
  std::vector<BigRational> v;
  for (auto [n, d] : p) v.push_back(make_rational(n, d));
  return ProbabilityDistribution::from_probabilities(v);
}

JointDistribution delta_joint() { return JointDistribution::synthetic({{h(0), h(0), BigRational(1)}}); }

std::vector<double> floats(const ProbabilityDistribution& d) {
  std::vector<double> out;
  for (const auto& o : d.support()) out.push_back(to_double(o.probability));
  return out;
}

TEST(Shannon, Examples) {
  const auto uniform4 = dist({{1, 4}, {1, 4}, {1, 4}, {1, 4}});
  EXPECT_NEAR(shannon(uniform4, LogBase::base2).value, 2.0, 1e-12);
  EXPECT_EQ(shannon(dist({{1, 1}}), LogBase::natural).value, 0.0);
  EXPECT_NEAR(shannon(dist({{1, 2}, {1, 4}, {1, 4}}), LogBase::base2).value, 1.5, 1e-12);
  EXPECT_EQ(shannon(uniform4, LogBase::base2).base, LogBase::base2);
}

TEST(Shannon, ZeroOutcomesDoNotMatter) {
  EXPECT_EQ(shannon(dist({{1, 3}, {0, 1}, {2, 3}})).value, shannon(dist({{1, 3}, {2, 3}})).value);
}

TEST(Tsallis, Examples) {
  const auto uniform4 = dist({{1, 4}, {1, 4}, {1, 4}, {1, 4}});
  EXPECT_NEAR(tsallis(uniform4, 2.0).value, 0.75, 1e-12);
  for (double q : {0.3, 1.0, 2.0, 7.5}) EXPECT_NEAR(tsallis(dist({{1, 1}}), q).value, 0.0, 1e-15);
  const auto column = marginal_first(column_joint(h(5), h(4), h(9), h(1)));
  const double h_nat = shannon(column).value;
  EXPECT_LE(std::fabs(tsallis(column, 1.0 + 1e-6).value - h_nat), 1e-5);
  EXPECT_LE(std::fabs(tsallis(column, 1.0 - 1e-6).value - h_nat), 1e-5);
  EXPECT_EQ(tsallis(column, 1.0).value, h_nat);
}

TEST(Tsallis, RejectsNonPositiveIndex) {
  const auto d = dist({{1, 2}, {1, 2}});
  EXPECT_THROW(tsallis(d, 0.0), DomainError);
  EXPECT_THROW(tsallis(d, -1.0), DomainError);
  EXPECT_THROW(tsallis(d, std::nan("")), DomainError);
  EXPECT_THROW(tsallis_information(delta_joint(), 0.0), DomainError);
}

TEST(Tsallis, AgreesWithLiteralFormula) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> weight(0, 50);
  std::uniform_real_distribution<double> index(0.05, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> w(1 + trial % 9);
    long total = 0;
    for (auto& x : w) total += (x = weight(rng));
    if (total == 0) continue;
    std::vector<BigRational> p;
    for (long x : w) p.push_back(make_rational(x, total));
    const auto d = ProbabilityDistribution::from_probabilities(p);
    const double q = index(rng);
    if (std::fabs(q - 1.0) < 1e-3) continue;
    EXPECT_NEAR(tsallis(d, q).value, testing::brute_tsallis(floats(d), q), 1e-12);
    EXPECT_NEAR(shannon(d).value, testing::brute_shannon(floats(d)), 1e-12);
    EXPECT_NEAR(shannon(d, LogBase::base2).value, shannon(d).value / std::numbers::ln2, 1e-12);
  }
}

TEST(MutualInformation, NineHalvesColumnInformation) {
  const auto joint = column_joint(h(5), h(4), h(9), h(1));
  const double expected = testing::brute_shannon({1.0 / 126, 20.0 / 126, 60.0 / 126, 40.0 / 126, 5.0 / 126});
  EXPECT_NEAR(mutual_information(joint), expected, 1e-12);
  EXPECT_NEAR(mutual_information(joint), 1.176, 1e-3);
  EXPECT_NEAR(mutual_information(joint, LogBase::base2), 1.176 / std::numbers::ln2, 1e-3);
  EXPECT_NEAR(subadditivity_margin(joint), 1.176, 1e-3);
  EXPECT_NEAR(araki_lieb_margin(joint), expected, 1e-12);
}

TEST(MutualInformation, IndependentAndDelta) {
  std::vector<JointOutcome> outcomes;
  const BigRational pa[] = {make_rational(1, 5), make_rational(4, 5)};
  const BigRational pb[] = {make_rational(1, 6), make_rational(1, 3), make_rational(1, 2)};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 3; ++b) outcomes.push_back({h(2 * a), h(2 * b), pa[a] * pb[b]});
  }
  EXPECT_NEAR(mutual_information(JointDistribution::synthetic(outcomes)), 0.0, 1e-12);
  EXPECT_EQ(mutual_information(delta_joint()), 0.0);
  EXPECT_EQ(subadditivity_margin(delta_joint()), 0.0);
  EXPECT_EQ(araki_lieb_margin(delta_joint()), 0.0);
  EXPECT_EQ(tsallis_information(delta_joint(), 2.5), 0.0);
}

TEST(TsallisInformation, NineHalvesColumn) {
  const auto joint = column_joint(h(5), h(4), h(9), h(1));
  EXPECT_NEAR(tsallis_information(joint, 2.0), 1.0 - 5626.0 / 15876.0, 1e-12);
  EXPECT_NEAR(tsallis_information(joint, 1.0), 1.176, 1e-3);
  EXPECT_NEAR(tsallis_information(joint, 1.0 + 1e-4), tsallis_information(joint, 1.0), 1e-3);
}

TEST(MaxMutualInformation, UniformMarginalBound) {
  EXPECT_NEAR(max_mutual_information(h(5), h(4), LogBase::base2), std::log2(5.0), 1e-12);
  EXPECT_NEAR(max_mutual_information(h(1), h(6)), std::log(2.0), 1e-12);
}

TEST(VerifyInequalities, Examples) {
  const auto reference = verify_inequalities(h(5), h(4), {0.5, 1.0, 2.0});
  EXPECT_TRUE(reference.pass);
  EXPECT_EQ(reference.columns.size(), 30u);

  const auto half = verify_inequalities(h(1), h(1), {1.0});
  EXPECT_TRUE(half.pass);
  for (const auto& c : half.columns) {
    for (double m : {c.subadditivity_margin, c.araki_lieb_margin, c.tsallis_margins[0].margin}) {
      EXPECT_TRUE(std::fabs(m) < 1e-15 || std::fabs(m - std::numbers::ln2) < 1e-15) << m;
    }
  }
  EXPECT_TRUE(verify_inequalities(h(2), h(2), {0.25, 4.0}).pass);
  EXPECT_THROW(verify_inequalities(h(1), h(1), {0.0}), DomainError);
}

TEST(VerifyInequalities, DegenerateCouplingIdentity) {
  const std::vector<double> grid{0.1, 0.5, 0.9, 1.0, 1.1, 2.0, 3.0};
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      const auto report = verify_inequalities(h(a), h(b), grid);
      EXPECT_TRUE(report.pass);
      for (const auto& c : report.columns) {
        EXPECT_NEAR(c.entropy_joint, c.entropy_first, 1e-12);
        EXPECT_NEAR(c.entropy_joint, c.entropy_second, 1e-12);
        EXPECT_NEAR(c.mutual_information, c.entropy_first, 1e-12);
        EXPECT_NEAR(c.araki_lieb_margin, c.entropy_joint, 1e-12);
        for (const auto& t : c.tsallis_margins) {
          EXPECT_NEAR(t.margin, tsallis(marginal_first(c.joint), t.q).value, 1e-12);
        }
      }
    }
  }
}

TEST(VerifyInequalities, ReportFlagsViolations) {
  ColumnInequalities rec{.joint = delta_joint()};
  rec.araki_lieb_margin = -1e-9;
  EXPECT_FALSE(rec.pass());
  rec.araki_lieb_margin = -1e-13;
  EXPECT_TRUE(rec.pass());
  rec.tsallis_margins.push_back({2.0, -1e-6});
  EXPECT_FALSE(rec.pass());
}

TEST(LogBase, Parsing) {
  EXPECT_EQ(parse_log_base("e"), LogBase::natural);
  EXPECT_EQ(parse_log_base("2"), LogBase::base2);
  EXPECT_THROW(parse_log_base("10"), DomainError);
  EXPECT_EQ(to_string(LogBase::base2), "2");
}

}  // namespace
}  // namespace cgent
