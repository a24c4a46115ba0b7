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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cgent/entropy.hpp"
#include "cgent/hahn.hpp"
#include "cgent/prob.hpp"

namespace cgent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

enum class Format { json, csv };

/// Shortest decimal with 12 significant digits ("%.12g"); -0 prints as 0.
std::string format_float(double x);

/// "min:max:step" closed grid, or a comma-separated list of values. Grid
/// points are rounded to 12 decimal places. DomainError on an invalid range
/// (min <= 0, step <= 0, min > max) or any q <= 0.
std::vector<double> parse_q_grid(std::string_view text);

std::string emit_cg(const CouplingLabel& label, const SignedSqrtRational& value, Format format);
std::string emit_three_j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3,
                         const SignedSqrtRational& value, Format format);
std::string emit_table(const BistochasticMatrix& matrix, Format format);
std::string emit_verify(const InequalityReport& report, Format format);
std::string emit_sweep(const JointDistribution& joint, const std::vector<double>& q_grid, Format format);
std::string emit_hahn_check(const HahnEquivalenceReport& report, Format format);

/// Full command-line entry point; returns the process exit code
/// (0 success, 1 usage or domain error, 2 verified violation).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgent::cli
