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

#include "preserver/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace preserver {

PolicyChoice parse_policy(const std::string& name) {
  if (name == "auto" || name == "automatic") return PolicyChoice::Automatic;
  if (name == "symbolic") return PolicyChoice::Symbolic;
  if (name == "randomized" || name == "schwartz-zippel") return PolicyChoice::Randomized;
  throw std::invalid_argument("unknown policy: " + name + " (expected auto, symbolic or randomized)");
}

std::string policy_choice_name(PolicyChoice p) {
  switch (p) {
    case PolicyChoice::Automatic: return "auto";
    case PolicyChoice::Symbolic: return "symbolic";
    case PolicyChoice::Randomized: return "randomized";
  }
  return "?";
}

TestPolicy policy_for(const InvariantForm& f, PolicyChoice choice, std::uint64_t seed) {
  switch (choice) {
    case PolicyChoice::Automatic: return TestPolicy::automatic(f, seed);
    case PolicyChoice::Symbolic:
      if (f.space().coord_count() > 10) {
        throw std::invalid_argument("symbolic policy rejected for dim > 10 (" + f.descriptor() + " has " +
                                    std::to_string(f.space().coord_count()) + " coordinates)");
      }
      return TestPolicy::symbolic();
    case PolicyChoice::Randomized: return TestPolicy::random_points(schwartz_zippel_trials(f), seed);
  }
  return TestPolicy::automatic(f, seed);
}

namespace {

// FNV-1a; keeps suite seeds stable across platforms.
std::uint64_t tag_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct TrialOutcome {
  bool ok = true;
  std::optional<SuiteFailure> failure;
  std::optional<mpq_class> bound;
};

using TrialFn = std::function<TrialOutcome(std::size_t trial, Rng& rng, std::uint64_t seed)>;

SuiteResult run_suite(const std::string& name, const InvariantForm& f, Family fam, const VerifyConfig& cfg,
                      std::string policy, const TrialFn& fn) {
  SuiteResult out;
  out.name = name;
  out.form = f.descriptor();
  out.family = family_name(fam);
  out.trials = cfg.trials;
  out.policy = std::move(policy);
  const std::uint64_t base = derive_seed(cfg.seed, tag_hash(name + "/" + out.form + "/" + out.family));
  std::vector<TrialOutcome> results(cfg.trials);
  parallel_for(
      cfg.trials,
      [&](std::size_t i) {
        const std::uint64_t s = derive_seed(base, i);
        Rng rng(s);
        try {
          results[i] = fn(i, rng, s);
        } catch (const std::exception& e) {
          results[i].ok = false;
          results[i].failure = SuiteFailure{i, std::nullopt, std::nullopt, e.what()};
        }
      },
      cfg.exec);
  for (auto& r : results) {
    if (r.bound && (!out.error_bound || *r.bound > *out.error_bound)) out.error_bound = r.bound;
    if (r.ok) continue;
    ++out.failures;
    if (!out.first_failure) out.first_failure = std::move(r.failure);
  }
  return out;
}

SuiteFailure failure(std::size_t i, const PreserverElement& t, const Verdict& v, std::string msg) {
  return SuiteFailure{i, t, v.counterexample, std::move(msg)};
}

}  // namespace

SuiteResult forward_suite(const InvariantForm& f, Family fam, const VerifyConfig& cfg) {
  const std::string policy = policy_for(f, cfg.policy, 0).name();
  return run_suite("forward", f, fam, cfg, policy, [&](std::size_t i, Rng& rng, std::uint64_t s) {
    TrialOutcome out;
    const PreserverElement t = sample_group_element(fam, f, SampleMode::Satisfying, rng);
    const Verdict v = preserves_form(t, f, policy_for(f, cfg.policy, derive_seed(s, 1)));
    out.bound = v.error_bound;
    if (!v.passed) {
      out.ok = false;
      out.failure = failure(i, t, v, "f o T != f");
    }
    return out;
  });
}

SuiteResult character_suite(const InvariantForm& f, Family fam, const VerifyConfig& cfg) {
  const std::string policy = policy_for(f, cfg.policy, 0).name();
  return run_suite("character", f, fam, cfg, policy, [&](std::size_t i, Rng& rng, std::uint64_t s) {
    TrialOutcome out;
    const PreserverElement t = sample_group_element(fam, f, SampleMode::Unconstrained, rng);
    const Verdict v = scales_form(t, f, policy_for(f, cfg.policy, derive_seed(s, 1)));
    out.bound = v.error_bound;
    if (!v.passed) {
      out.ok = false;
      out.failure = failure(i, t, v, "f o T is not a multiple of f");
    } else if (*v.scalar != scaling_factor(t, f)) {
      out.ok = false;
      out.failure = failure(i, t, v, "measured scalar " + v.scalar->to_string() + " != chi " +
                                         scaling_factor(t, f).to_string());
    }
    return out;
  });
}

SuiteResult minimality_suite(const InvariantForm& f, Family fam, const VerifyConfig& cfg) {
  return run_suite("minimality", f, fam, cfg, "sampled-minimals", [&](std::size_t i, Rng& rng, std::uint64_t s) {
    TrialOutcome out;
    const PreserverElement t = sample_group_element(fam, f, SampleMode::Unconstrained, rng);
    const Verdict v = preserves_minimals(t, f, 1, derive_seed(s, 2));
    if (!v.passed) {
      out.ok = false;
      out.failure = failure(i, t, v, "minimal element mapped to a non-minimal one");
    }
    return out;
  });
}

SuiteResult falsification_suite(const InvariantForm& f, Family fam, const VerifyConfig& cfg) {
  const std::size_t points = cfg.falsification_points;
  return run_suite("falsification", f, fam, cfg, "schwartz-zippel", [&](std::size_t i, Rng& rng, std::uint64_t s) {
    TrialOutcome out;
    const PreserverElement t = sample_group_element(fam, f, SampleMode::Violating, rng);
    if (constraint_satisfied(t, f)) {
      out.ok = false;
      out.failure = SuiteFailure{i, t, std::nullopt, "sampler returned a satisfying element"};
      return out;
    }
    const Verdict v = preserves_form(t, f, TestPolicy::random_points(points, derive_seed(s, 3)));
    if (v.passed) {
      out.ok = false;
      out.failure = failure(i, t, v, "violating element passed preserves_form");
    }
    return out;
  });
}

SuiteResult star_identity_suite(const Field& k) {
  const InvariantForm pf = InvariantForm::skew_pf(4, k);
  const PreserverElement star(pf.space(), k, HodgeStar4{});
  const Verdict v = preserves_form(star, pf, TestPolicy::symbolic());
  SuiteResult out;
  out.name = "star-identity";
  out.form = pf.descriptor();
  out.family = "hodge-star4";
  out.trials = 1;
  out.policy = "symbolic";
  if (!v.passed) {
    out.failures = 1;
    out.first_failure = SuiteFailure{0, star, v.counterexample, "Pf o * != Pf"};
  }
  return out;
}

SuiteResult hyperdet_permutation_suite(const Field& k) {
  const InvariantForm h = InvariantForm::hyperdet(k);
  SuiteResult out;
  out.name = "permutation-identity";
  out.form = h.descriptor();
  out.family = "factor-permutation";
  out.policy = "symbolic";
  Perm3 sigma{0, 1, 2};
  do {
    ++out.trials;
    const PreserverElement t(h.space(), k, FactorPermutation{sigma});
    const Verdict v = preserves_form(t, h, TestPolicy::symbolic());
    if (!v.passed) {
      ++out.failures;
      if (!out.first_failure) out.first_failure = SuiteFailure{out.trials - 1, t, v.counterexample, "hyperdet o sigma != hyperdet"};
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

bool CorollaryReport::passed() const {
  for (const auto& s : suites)
    if (!s.passed()) return false;
  return true;
}

namespace {

const std::map<std::string, std::vector<std::string>>& corollary_table() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"symm.f", {"symm-det:3", "symm-det:4"}},
      {"skew.f", {"skew-pf:6", "skew-pf:8"}},
      {"skew.f4", {"skew-pf:4"}},
      {"square.f", {"square-det:2", "square-det:3", "square-det:4"}},
      {"cubics", {"cubic-disc"}},
      {"SL6", {"wedge36"}},
      {"Sp6", {"sp6"}},
      {"hyperdet", {"hyperdet"}},
      {"blackholes", {"mat2n:4", "mat2n:5", "mat2n:6"}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& corollary_ids() {
  static const std::vector<std::string> ids{"symm.f", "skew.f",   "skew.f4",  "square.f",  "cubics",
                                            "SL6",    "Sp6",      "hyperdet", "blackholes"};
  return ids;
}

std::vector<std::string> corollary_forms(const std::string& id) {
  if (id == "e6") throw OutOfScope("out of scope: Table 1 line 3");
  if (id == "half-spin") throw OutOfScope("out of scope: Table 1 line 9");
  if (id == "e7") throw OutOfScope("out of scope: Table 1 line 10");
  const auto& table = corollary_table();
  auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown corollary: " + id);
  return it->second;
}

CorollaryReport verify_corollary(const std::string& id, const VerifyConfig& cfg) {
  if (cfg.trials == 0) throw std::invalid_argument("trials must be at least 1");
  const auto forms = corollary_forms(id);
  CorollaryReport report;
  report.corollary = id;
  report.field = cfg.field.descriptor();
  report.seed = cfg.seed;
  report.trials = cfg.trials;
  report.policy = policy_choice_name(cfg.policy);
  for (const auto& desc : forms) {
    const InvariantForm f = InvariantForm::parse(desc, cfg.field);
    policy_for(f, cfg.policy, 0);
    for (Family fam : families_for(f)) {
      report.suites.push_back(forward_suite(f, fam, cfg));
      report.suites.push_back(character_suite(f, fam, cfg));
      report.suites.push_back(minimality_suite(f, fam, cfg));
      report.suites.push_back(falsification_suite(f, fam, cfg));
    }
  }
  if (id == "skew.f4") report.suites.push_back(star_identity_suite(cfg.field));
  if (id == "hyperdet") report.suites.push_back(hyperdet_permutation_suite(cfg.field));
  return report;
}

}  // namespace preserver
