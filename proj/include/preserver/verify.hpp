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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "preserver/parallel.hpp"
#include "preserver/preservers.hpp"

namespace preserver {

/// Raised for corollary ids naming representations this library does not model.
class OutOfScope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PolicyChoice { Automatic, Symbolic, Randomized };

PolicyChoice parse_policy(const std::string& name);
std::string policy_choice_name(PolicyChoice p);

struct VerifyConfig {
  Field field;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  PolicyChoice policy = PolicyChoice::Automatic;
  /// Evaluation points per falsification attempt.
  std::size_t falsification_points = 32;
  Execution exec = Execution::Parallel;
};

/// Identity-test policy for one trial. Symbolic on a space with more than 10
/// coordinates throws std::invalid_argument.
TestPolicy policy_for(const InvariantForm& f, PolicyChoice choice, std::uint64_t seed);

struct SuiteFailure {
  std::size_t trial = 0;
  std::optional<PreserverElement> element;
  std::optional<Counterexample> counterexample;
  std::string message;
};

struct SuiteResult {
  std::string name;
  std::string form;
  std::string family;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string policy;
  /// Largest per-trial compound error bound among randomized tests.
  std::optional<mpq_class> error_bound;
  /// First failing trial, if any.
  std::optional<SuiteFailure> first_failure;
  bool passed() const { return failures == 0; }
};

/// Sampled constraint-satisfying elements preserve f.
SuiteResult forward_suite(const InvariantForm& f, Family fam, const VerifyConfig& cfg);
/// Unconstrained elements scale f by exactly scaling_factor.
SuiteResult character_suite(const InvariantForm& f, Family fam, const VerifyConfig& cfg);
/// Unconstrained elements map sampled minimal vectors to minimal vectors (one per trial).
SuiteResult minimality_suite(const InvariantForm& f, Family fam, const VerifyConfig& cfg);
/// Constraint-violating elements are rejected by preserves_form within the point budget.
SuiteResult falsification_suite(const InvariantForm& f, Family fam, const VerifyConfig& cfg);

/// Pf o * = Pf as polynomials in the six coordinates of Alt(4).
SuiteResult star_identity_suite(const Field& f);
/// hyperdet o sigma = hyperdet as polynomials, for every sigma in S_3.
SuiteResult hyperdet_permutation_suite(const Field& f);

struct CorollaryReport {
  std::string corollary;
  std::string field;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::string policy;
  std::vector<SuiteResult> suites;
  bool passed() const;
};

const std::vector<std::string>& corollary_ids();
/// Form descriptors exercised by a corollary (e.g. symm.f -> symm-det:3, symm-det:4).
std::vector<std::string> corollary_forms(const std::string& id);
/// Throws OutOfScope for e6, half-spin, e7 and std::invalid_argument for unknown ids.
CorollaryReport verify_corollary(const std::string& id, const VerifyConfig& cfg);

}  // namespace preserver
