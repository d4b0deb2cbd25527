/*
 * Copyright 2026 The Preserver Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "preserver/json_io.hpp"
#include "preserver/multilinear.hpp"

namespace {

using namespace preserver;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string form;
  std::string field = "Q";
  std::string input = "-";
  std::string oracle = "rank";
  std::string corollary;
  std::string case_id;
  std::string policy = "auto";
  std::string out;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
};

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON input: ") + e.what());
  }
}

void write_report(const Json& j, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write report: " + path);
  out << j.dump(2) << '\n';
}

RepVector read_vector(const Options& o, const InvariantForm& f) {
  RepVector v = repvector_from_json(read_json(o.input), f.field());
  if (!(v.space == f.space())) {
    throw std::invalid_argument("input lies in " + v.space.describe() + ", form " + f.descriptor() + " expects " +
                                f.space().describe());
  }
  return v;
}

int cmd_eval(const Options& o) {
  const Field k = Field::parse(o.field);
  const InvariantForm f = InvariantForm::parse(o.form, k);
  std::cout << f.eval(read_vector(o, f)).to_string() << '\n';
  return kPass;
}

int cmd_minimal(const Options& o) {
  const Field k = Field::parse(o.field);
  const InvariantForm f = InvariantForm::parse(o.form, k);
  const Oracle oracle = parse_oracle(o.oracle);
  if (!oracle_applies(oracle, f)) {
    throw std::invalid_argument("oracle " + o.oracle + " does not apply to " + f.descriptor() +
                                " (rrs: lines 1-6; radical: quartic lines 6-8, 11)");
  }
  RrsPolicy rrs;
  rrs.seed = o.seed;
  rrs.exact = parse_policy(o.policy) != PolicyChoice::Randomized;
  const MinimalityVerdict v = minimal_by(oracle, f, read_vector(o, f), rrs);
  std::cout << to_json(v).dump() << '\n';
  return kPass;
}

int cmd_polarize(const Options& o) {
  const Field k = Field::parse(o.field);
  const InvariantForm f = InvariantForm::parse(o.form, k);
  const Json j = read_json(o.input);
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("polarize expects a JSON array of four vectors");
  std::vector<RepVector> x;
  for (const auto& e : j) x.push_back(repvector_from_json(e, k));
  std::cout << polarize4(f, x[0], x[1], x[2], x[3]).to_string() << '\n';
  return kPass;
}

int cmd_verify(const Options& o) {
  VerifyConfig cfg;
  cfg.field = Field::parse(o.field);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.policy = parse_policy(o.policy);
  const CorollaryReport r = verify_corollary(o.corollary, cfg);
  write_report(to_json(r), o.out);
  for (const auto& s : r.suites) {
    std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name << ' ' << s.form << ' ' << s.family << ' '
              << s.trials - s.failures << '/' << s.trials << '\n';
    if (!s.passed() && s.first_failure) std::cout << "  " << s.first_failure->message << '\n';
  }
  std::cout << r.corollary << " over " << r.field << " (seed " << r.seed << "): " << (r.passed() ? "pass" : "FAIL")
            << '\n';
  return r.passed() ? kPass : kFail;
}

int cmd_bruteforce(const Options& o) {
  const CensusReport r = run_bruteforce_case(o.case_id);
  write_report(to_json(r), o.out);
  for (const auto& [key, value] : r.counts) {
    std::cout << key << " = " << value;
    auto it = r.expected.find(key);
    if (it != r.expected.end()) std::cout << " (expected " << it->second << ')';
    std::cout << '\n';
  }
  std::cout << r.case_id << ": " << (r.passed ? "pass" : "FAIL") << '\n';
  return r.passed ? kPass : kFail;
}

int cmd_list() {
  std::cout << "forms: symm-det:n skew-pf:n square-det:n quadric:n cubic-disc wedge36 sp6 mat2n:n hyperdet\n";
  std::cout << "corollaries:";
  for (const auto& id : corollary_ids()) std::cout << ' ' << id;
  std::cout << "\ncases:";
  for (const auto& id : bruteforce_cases()) std::cout << ' ' << id;
  std::cout << "\noracles: rank rrs radical\npolicies: auto symbolic randomized\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant forms, minimal elements and linear preservers"};
  app.require_subcommand(1);
  Options o;

  auto add_field = [&](CLI::App* c) { c->add_option("--field", o.field, "Q or Fp:<prime>"); };
  auto add_input = [&](CLI::App* c) { c->add_option("--input,input", o.input, "JSON file, - for stdin"); };

  auto* eval = app.add_subcommand("eval", "Evaluate an invariant form on a vector");
  eval->add_option("--form", o.form, "form descriptor")->required();
  add_field(eval);
  add_input(eval);

  auto* minimal = app.add_subcommand("minimal", "Test whether a vector is minimal");
  minimal->add_option("--form", o.form, "form descriptor")->required();
  minimal->add_option("--oracle", o.oracle, "rank, rrs or radical");
  minimal->add_option("--policy", o.policy, "auto/symbolic or randomized (rrs only)");
  minimal->add_option("--seed", o.seed);
  add_field(minimal);
  add_input(minimal);

  auto* polarize = app.add_subcommand("polarize", "Evaluate the polarized quartic on four vectors");
  polarize->add_option("--form", o.form, "quartic form descriptor")->required();
  add_field(polarize);
  add_input(polarize);

  auto* verify = app.add_subcommand("verify", "Run the property suites for a corollary");
  verify->add_option("--corollary,corollary", o.corollary, "corollary id")->required();
  verify->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed);
  verify->add_option("--policy", o.policy, "auto, symbolic or randomized");
  verify->add_option("--out", o.out, "JSON report path");
  add_field(verify);

  auto* brute = app.add_subcommand("bruteforce", "Run an exhaustive finite-field case");
  brute->add_option("--case,case", o.case_id, "case id")->required();
  brute->add_option("--out", o.out, "JSON report path");

  app.add_subcommand("list", "List forms, corollaries and cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*minimal) return cmd_minimal(o);
    if (*polarize) return cmd_polarize(o);
    if (*verify) return cmd_verify(o);
    if (*brute) return cmd_bruteforce(o);
    return cmd_list();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
