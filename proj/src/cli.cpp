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

#include "cgent/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace cgent::cli {

using Json = nlohmann::ordered_json;

std::string format_float(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

// The JSON writer prints the shortest round-trip form, so rounding the value
// to 12 significant digits first makes it print exactly like format_float.
double json_float(double x) { return std::stod(format_float(x)); }

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw DomainError("cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

double snap(double q) { return std::round(q * 1e12) / 1e12; }

}  // namespace

std::vector<double> parse_q_grid(std::string_view text) {
  std::vector<double> grid;
  if (std::count(text.begin(), text.end(), ':') == 2) {
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    const double lo = parse_double(text.substr(0, a));
    const double hi = parse_double(text.substr(a + 1, b - a - 1));
    const double step = parse_double(text.substr(b + 1));
    if (!(lo > 0.0)) throw DomainError("q range minimum must be positive");
    if (!(step > 0.0)) throw DomainError("q range step must be positive");
    if (lo > hi) throw DomainError("q range minimum exceeds maximum");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) grid.push_back(snap(lo + static_cast<double>(i) * step));
    return grid;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const double q = parse_double(text.substr(start, comma - start));
    if (!(q > 0.0)) throw DomainError("entropic index q must be positive");
    grid.push_back(q);
    start = comma + 1;
  }
  return grid;
}

namespace {

std::string pair_name(HalfInt a, HalfInt b) { return a.to_string() + ":" + b.to_string(); }

Json label_json(const CouplingLabel& l) {
  return Json{{"j1", l.j1.to_string()}, {"m1", l.m1.to_string()}, {"j2", l.j2.to_string()},
              {"m2", l.m2.to_string()}, {"j", l.j.to_string()},   {"m", l.m.to_string()}};
}

Json value_json(const SignedSqrtRational& v) {
  return Json{{"sign", v.sign()}, {"radicand", to_fraction_string(v.radicand())}, {"value", json_float(ssr_to_float(v))}};
}

std::string csv_value(const SignedSqrtRational& v) {
  return std::to_string(v.sign()) + "," + to_fraction_string(v.radicand()) + "," + format_float(ssr_to_float(v));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit_cg(const CouplingLabel& label, const SignedSqrtRational& value, Format format) {
  if (format == Format::csv) {
    return "j1,m1,j2,m2,j,m,sign,radicand,value\n" + label.j1.to_string() + "," + label.m1.to_string() + "," +
           label.j2.to_string() + "," + label.m2.to_string() + "," + label.j.to_string() + "," +
           label.m.to_string() + "," + csv_value(value) + "\n";
  }
  Json j{{"command", "cg"}, {"label", label_json(label)}};
  j.update(value_json(value));
  return dump(j);
}

std::string emit_three_j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3,
                         const SignedSqrtRational& value, Format format) {
  if (format == Format::csv) {
    return "j1,j2,j3,m1,m2,m3,sign,radicand,value\n" + j1.to_string() + "," + j2.to_string() + "," +
           j3.to_string() + "," + m1.to_string() + "," + m2.to_string() + "," + m3.to_string() + "," +
           csv_value(value) + "\n";
  }
  Json j{{"command", "threej"},
         {"symbol",
          Json{{"j1", j1.to_string()}, {"j2", j2.to_string()}, {"j3", j3.to_string()},
               {"m1", m1.to_string()}, {"m2", m2.to_string()}, {"m3", m3.to_string()}}}};
  j.update(value_json(value));
  return dump(j);
}

std::string emit_table(const BistochasticMatrix& matrix, Format format) {
  const std::size_t n = matrix.size();
  if (format == Format::csv) {
    std::string out = "m1:m2";
    for (const auto& c : matrix.cols()) out += "," + pair_name(c.j, c.m);
    out += "\n";
    for (std::size_t r = 0; r < n; ++r) {
      out += pair_name(matrix.rows()[r].m1, matrix.rows()[r].m2);
      for (std::size_t s = 0; s < n; ++s) out += "," + to_fraction_string(matrix(r, s));
      out += "\n";
    }
    return out;
  }
  Json rows = Json::array();
  for (const auto& r : matrix.rows()) rows.push_back(pair_name(r.m1, r.m2));
  Json cols = Json::array();
  for (const auto& c : matrix.cols()) cols.push_back(pair_name(c.j, c.m));
  Json entries = Json::array();
  for (std::size_t r = 0; r < n; ++r) {
    Json row = Json::array();
    for (std::size_t s = 0; s < n; ++s) row.push_back(to_fraction_string(matrix(r, s)));
    entries.push_back(std::move(row));
  }
  return dump(Json{{"command", "table"},
                   {"j1", matrix.j1().to_string()},
                   {"j2", matrix.j2().to_string()},
                   {"N", n},
                   {"rows", std::move(rows)},
                   {"cols", std::move(cols)},
                   {"entries", std::move(entries)}});
}

std::string emit_verify(const InequalityReport& report, Format format) {
  if (format == Format::csv) {
    std::string out = "j,m,H_A,H_B,H_AB,mutual_information,subadditivity_margin,araki_lieb_margin";
    for (double q : report.q_grid) out += ",tsallis_margin_q=" + format_float(q);
    out += ",pass\n";
    for (const auto& c : report.columns) {
      out += c.j.to_string() + "," + c.m.to_string() + "," + format_float(c.entropy_first) + "," +
             format_float(c.entropy_second) + "," + format_float(c.entropy_joint) + "," +
             format_float(c.mutual_information) + "," + format_float(c.subadditivity_margin) + "," +
             format_float(c.araki_lieb_margin);
      for (const auto& t : c.tsallis_margins) out += "," + format_float(t.margin);
      out += c.pass() ? ",true\n" : ",false\n";
    }
    return out;
  }
  Json q_grid = Json::array();
  for (double q : report.q_grid) q_grid.push_back(json_float(q));
  Json columns = Json::array();
  for (const auto& c : report.columns) {
    Json joint = Json::array();
    for (const auto& o : c.joint.support()) {
      joint.push_back(Json{{"m1", o.m1.to_string()}, {"m2", o.m2.to_string()}, {"p", to_fraction_string(o.probability)}});
    }
    Json tsallis = Json::array();
    for (const auto& t : c.tsallis_margins) tsallis.push_back(Json{{"q", json_float(t.q)}, {"margin", json_float(t.margin)}});
    columns.push_back(Json{{"j", c.j.to_string()},
                           {"m", c.m.to_string()},
                           {"joint", std::move(joint)},
                           {"H_A", json_float(c.entropy_first)},
                           {"H_B", json_float(c.entropy_second)},
                           {"H_AB", json_float(c.entropy_joint)},
                           {"mutual_information", json_float(c.mutual_information)},
                           {"subadditivity_margin", json_float(c.subadditivity_margin)},
                           {"araki_lieb_margin", json_float(c.araki_lieb_margin)},
                           {"tsallis_margins", std::move(tsallis)},
                           {"pass", c.pass()}});
  }
  return dump(Json{{"command", "verify"},
                   {"j1", report.j1.to_string()},
                   {"j2", report.j2.to_string()},
                   {"log_base", std::string(to_string(report.base))},
                   {"tolerance", kInequalityTolerance},
                   {"max_mutual_information", json_float(max_mutual_information(report.j1, report.j2, report.base))},
                   {"q_grid", std::move(q_grid)},
                   {"pass", report.pass},
                   {"columns", std::move(columns)}});
}

std::string emit_sweep(const JointDistribution& joint, const std::vector<double>& q_grid, Format format) {
  std::vector<double> values;
  values.reserve(q_grid.size());
  for (double q : q_grid) values.push_back(tsallis_information(joint, q));

  if (format == Format::csv) {
    std::string out = "q,I_q\n";
    for (std::size_t i = 0; i < q_grid.size(); ++i) out += format_float(q_grid[i]) + "," + format_float(values[i]) + "\n";
    return out;
  }
  Json points = Json::array();
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    points.push_back(Json{{"q", json_float(q_grid[i])}, {"I_q", json_float(values[i])}});
  }
  Json j{{"command", "sweep-tsallis"}};
  if (const auto& c = joint.column()) {
    j["j1"] = c->j1.to_string();
    j["j2"] = c->j2.to_string();
    j["j"] = c->j.to_string();
    j["m"] = c->m.to_string();
  }
  j["mutual_information"] = json_float(mutual_information(joint, LogBase::natural));
  j["points"] = std::move(points);
  return dump(j);
}

namespace {

std::string_view status_name(HahnComparison::Status s) {
  switch (s) {
    case HahnComparison::Status::matched:
      return "matched";
    case HahnComparison::Status::reflected:
      return "reflected";
    case HahnComparison::Status::mismatch:
      return "mismatch";
    case HahnComparison::Status::skipped:
      return "skipped";
  }
  return "unknown";
}

}  // namespace

std::string emit_hahn_check(const HahnEquivalenceReport& report, Format format) {
  if (format == Format::csv) {
    std::string out = "j1,m1,j2,m2,j,m,status,hahn,racah\n";
    for (const auto& c : report.comparisons) {
      const auto& l = c.label;
      out += l.j1.to_string() + "," + l.m1.to_string() + "," + l.j2.to_string() + "," + l.m2.to_string() + "," +
             l.j.to_string() + "," + l.m.to_string() + "," + std::string(status_name(c.status)) + "," +
             (c.status == HahnComparison::Status::skipped ? std::string() : c.via_hahn.to_string()) + "," +
             c.via_racah.to_string() + "\n";
    }
    return out;
  }
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back(Json{{"label", label_json(m.label)},
                              {"hahn", m.via_hahn.to_string()},
                              {"racah", m.via_racah.to_string()}});
  }
  Json skipped = Json::array();
  for (const auto& l : report.skipped) skipped.push_back(label_json(l));
  return dump(Json{{"command", "hahn-check"},
                   {"j1", report.j1.to_string()},
                   {"j2", report.j2.to_string()},
                   {"pass", report.pass()},
                   {"labels", report.comparisons.size()},
                   {"matched", report.matched},
                   {"reflected", report.reflected},
                   {"mismatches", std::move(mismatches)},
                   {"skipped", std::move(skipped)}});
}

namespace {

struct Options {
  std::vector<std::string> spins;
  std::string format;
  std::string out_path;
  std::string log_base = "e";
  std::string q_spec;
};

Format resolve_format(const std::string& requested, Format fallback) {
  if (requested.empty()) return fallback;
  if (requested == "json") return Format::json;
  if (requested == "csv") return Format::csv;
  throw DomainError("unknown format '" + requested + "' (expected json or csv)");
}

std::vector<HalfInt> parse_spins(const std::vector<std::string>& text) {
  std::vector<HalfInt> spins;
  spins.reserve(text.size());
  for (const auto& t : text) spins.push_back(HalfInt::parse(t));
  return spins;
}

void require_magnitudes(std::initializer_list<HalfInt> js) {
  for (HalfInt j : js) {
    if (!is_spin(j)) throw DomainError("spin magnitude " + j.to_string() + " is negative");
  }
}

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& description, Options& opt,
                      std::size_t arity, const std::string& spin_help) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->add_option("spins", opt.spins, spin_help)->required()->expected(static_cast<int>(arity));
  sub->add_option("--format", opt.format, "Output format: json or csv");
  sub->add_option("--out", opt.out_path, "Write output to PATH instead of standard output");
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Clebsch-Gordan coefficients, Hahn polynomials and entropic inequalities", "cgent"};
  app.require_subcommand(1);
  Options opt;

  auto* cg = add_command(app, "cg", "Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m>", opt, 6, "j1 m1 j2 m2 j m");
  auto* threej = add_command(app, "threej", "Wigner 3-j symbol (j1 j2 j3; m1 m2 m3)", opt, 6, "j1 j2 j3 m1 m2 m3");
  auto* table = add_command(app, "table", "Bistochastic matrix of squared coefficients", opt, 2, "j1 j2");
  auto* verify = add_command(app, "verify", "Check entropic inequalities on every column", opt, 2, "j1 j2");
  verify->add_option("--q", opt.q_spec, "Entropic indices: min:max:step or a comma list");
  verify->add_option("--log-base", opt.log_base, "Logarithm base: e or 2");
  auto* sweep = add_command(app, "sweep-tsallis", "Tsallis information I_q over a q grid", opt, 4, "j1 j2 j m");
  sweep->add_option("--q", opt.q_spec, "Entropic indices: min:max:step or a comma list (default 0.05:3:0.05)");
  auto* hahn = add_command(app, "hahn-check", "Compare the Hahn-polynomial and Racah-sum coefficients", opt, 2, "j1 j2");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string text;
  int code = kExitOk;
  try {
    const auto s = parse_spins(opt.spins);
    if (cg->parsed()) {
      const CouplingLabel label{s[0], s[1], s[2], s[3], s[4], s[5]};
      text = emit_cg(label, clebsch_gordan(label), resolve_format(opt.format, Format::json));
    } else if (threej->parsed()) {
      text = emit_three_j(s[0], s[1], s[2], s[3], s[4], s[5], three_j(s[0], s[1], s[2], s[3], s[4], s[5]),
                          resolve_format(opt.format, Format::json));
    } else if (table->parsed()) {
      require_magnitudes({s[0], s[1]});
      text = emit_table(build_bistochastic(s[0], s[1]), resolve_format(opt.format, Format::csv));
    } else if (verify->parsed()) {
      require_magnitudes({s[0], s[1]});
      const auto grid = parse_q_grid(opt.q_spec.empty() ? "0.1,0.5,0.9,1,1.1,2,3" : opt.q_spec);
      const auto report = verify_inequalities(s[0], s[1], grid, parse_log_base(opt.log_base));
      text = emit_verify(report, resolve_format(opt.format, Format::json));
      if (!report.pass) code = kExitViolation;
    } else if (sweep->parsed()) {
      require_magnitudes({s[0], s[1]});
      const auto grid = parse_q_grid(opt.q_spec.empty() ? "0.05:3:0.05" : opt.q_spec);
      text = emit_sweep(column_joint(s[0], s[1], s[2], s[3]), grid, resolve_format(opt.format, Format::csv));
    } else if (hahn->parsed()) {
      require_magnitudes({s[0], s[1]});
      const auto report = check_hahn_equivalence(s[0], s[1]);
      text = emit_hahn_check(report, resolve_format(opt.format, Format::json));
      if (!report.pass()) code = kExitViolation;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (opt.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << opt.out_path << " for writing\n";
      return kExitUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace cgent::cli
