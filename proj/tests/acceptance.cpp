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

// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "preserver/bruteforce.hpp"
#include "preserver/groups.hpp"
#include "preserver/multilinear.hpp"
#include "preserver/verify.hpp"
#include "preserver/wedge.hpp"

namespace {

using namespace preserver;

// Pinned tolerances.
constexpr std::size_t kForwardTrials = 1000;
constexpr std::size_t kCharacterTrials = 1000;
constexpr std::size_t kIdentityTrials = 1000;
constexpr std::size_t kRatioTrials = 100;
constexpr std::size_t kFalsifyTrials = 100;
constexpr std::size_t kFalsifyPoints = 32;
constexpr std::size_t kMinimalTrials = 1000;
constexpr double kForwardBudget = 120.0;
constexpr double kOracleBudget = 10.0;
constexpr double kFixerBudget = 30.0;
constexpr double kCensusBudget = 60.0;
constexpr std::int64_t kHyperdetRatio = -1;
constexpr std::uint64_t kSeed = 20260101;

const mpq_class kMaxBound(1, mpz_class(1) << 60);

struct Outcome {
  bool passed = true;
  std::string detail;
};

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Field> fields() { return {Field::rationals(), Field::prime(7)}; }

// Every (form, family) pair across the corollaries.
std::vector<std::pair<std::string, Family>> all_cases(const Field& k) {
  std::vector<std::pair<std::string, Family>> out;
  for (const auto& id : corollary_ids())
    for (const auto& desc : corollary_forms(id))
      for (Family fam : families_for(InvariantForm::parse(desc, k))) out.emplace_back(desc, fam);
  return out;
}

using SuiteFn = SuiteResult (*)(const InvariantForm&, Family, const VerifyConfig&);

Outcome run_suites(SuiteFn fn, std::size_t trials, std::size_t* total, mpq_class* worst) {
  Outcome o;
  std::ostringstream fails;
  *total = 0;
  for (const Field& k : fields()) {
    VerifyConfig cfg;
    cfg.field = k;
    cfg.trials = trials;
    cfg.seed = kSeed;
    cfg.falsification_points = kFalsifyPoints;
    for (const auto& [desc, fam] : all_cases(k)) {
      const SuiteResult r = fn(InvariantForm::parse(desc, k), fam, cfg);
      *total += r.trials;
      if (r.error_bound && worst && *r.error_bound > *worst) *worst = *r.error_bound;
      if (!r.passed()) {
        o.passed = false;
        fails << ' ' << desc << '/' << family_name(fam) << '/' << k.descriptor() << " (" << r.failures << " failed";
        if (r.first_failure) fails << ": " << r.first_failure->message;
        fails << ')';
      }
    }
  }
  o.detail = fails.str();
  return o;
}

Outcome criterion_forward() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0;
  mpq_class worst = 0;
  Outcome o = run_suites(&forward_suite, kForwardTrials, &total, &worst);
  const double s = seconds(t0);
  const bool bound_ok = worst <= kMaxBound;
  std::ostringstream d;
  d << total << " elements, max error bound " << (worst == 0 ? std::string("0 (symbolic)") : worst.get_str())
    << " <= 2^-60: " << (bound_ok ? "yes" : "no") << ", " << s << " s (budget " << kForwardBudget << " s)"
    << o.detail;
  o.passed = o.passed && bound_ok && s < kForwardBudget;
  o.detail = d.str();
  return o;
}

Outcome criterion_character() {
  std::size_t total = 0;
  Outcome o = run_suites(&character_suite, kCharacterTrials, &total, nullptr);
  o.detail = std::to_string(total) + " unconstrained elements, measured scalar == chi" + o.detail;
  return o;
}

Outcome census(CensusReport r, double budget, const std::string& keys) {
  Outcome o;
  std::ostringstream d;
  std::istringstream ks(keys);
  for (std::string k; ks >> k;) d << k << '=' << r.counts[k] << ' ';
  d << "(" << r.elapsed_seconds << " s, budget " << budget << " s)";
  o.passed = r.passed && r.elapsed_seconds < budget;
  o.detail = d.str();
  return o;
}

Outcome criterion_symbolic() {
  Outcome o;
  std::ostringstream d;
  for (const Field& k : fields()) {
    const SuiteResult star = star_identity_suite(k);
    const SuiteResult perm = hyperdet_permutation_suite(k);
    o.passed = o.passed && star.passed() && perm.passed();
    d << k.descriptor() << ": Pf o * = Pf " << (star.passed() ? "ok" : "FAILED") << ", hyperdet o sigma "
      << perm.trials - perm.failures << "/6; ";
  }
  const Field q = Field::rationals();
  for (std::size_t n : {4u, 6u, 8u}) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < kIdentityTrials; ++i) {
      Rng rng(derive_seed(kSeed ^ n, i));
      const RepVector v = random_vector(Space::alt(n), q, 20, rng);
      const FieldElement pf = pfaffian(v);
      if (pf * pf != determinant(to_matrix(v))) ++bad;
    }
    o.passed = o.passed && bad == 0;
    d << "Pf^2 = det n=" << n << ": " << kIdentityTrials - bad << '/' << kIdentityTrials << ' ';
  }
  o.detail = d.str();
  return o;
}

Outcome criterion_calibration() {
  Outcome o;
  std::ostringstream d;
  const Space a4 = Space::alt(4);
  d << "c0 = " << wedge36_constant(Field::rationals()).to_string() << "; ";
  for (const Field& k : fields()) {
    const InvariantForm f = InvariantForm::wedge36(k);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < kIdentityTrials; ++i) {
      Rng rng(derive_seed(kSeed + 6, i));
      const RepVector x = random_vector(a4, k, 50, rng);
      const RepVector y = random_vector(a4, k, 50, rng);
      const FieldElement xy = symplectic_pair(a4, x, y);
      if (f.eval(w_embed(x, y)) != xy * xy - k.from_int(4) * pfaffian(x) * pfaffian(y)) ++bad;
    }
    o.passed = o.passed && bad == 0;
    d << k.descriptor() << ' ' << kIdentityTrials - bad << '/' << kIdentityTrials << " pairs ";
  }
  o.detail = d.str();
  return o;
}

Outcome criterion_ratio() {
  const Field q = Field::rationals();
  const Matrix split = Matrix::from_ints(q, {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
  const InvariantForm m = InvariantForm::mat2n(split);
  const InvariantForm h = InvariantForm::hyperdet(q);
  const FieldElement pinned = q.from_int(kHyperdetRatio);
  Outcome o;
  std::size_t used = 0, seen = 0;
  std::string first;
  while (used < kRatioTrials) {
    Rng rng(derive_seed(kSeed + 7, seen++));
    const RepVector x = random_vector(m.space(), q, 10, rng);
    const FieldElement hv = h.eval(RepVector(Space::tritensor(), x.coords));
    if (hv.is_zero()) continue;
    ++used;
    const FieldElement ratio = m.eval(x) / hv;
    if (first.empty()) first = ratio.to_string();
    if (ratio != pinned) o.passed = false;
  }
  o.detail = std::to_string(used) + " tensors, S = antidiag(1,-1,-1,1), first ratio " + first + ", all equal to pinned " +
             pinned.to_string() + ": " + (o.passed ? "yes" : "no");
  return o;
}

Outcome criterion_falsification() {
  std::size_t total = 0;
  Outcome o = run_suites(&falsification_suite, kFalsifyTrials, &total, nullptr);
  o.detail = std::to_string(total) + " violating elements rejected within " + std::to_string(kFalsifyPoints) +
             " points each" + o.detail;
  return o;
}

// Minimality preservation on spaces without an attached family-form pair.
std::size_t extra_minimality(const Field& k, std::ostringstream& d) {
  std::size_t bad = 0;
  const Space rect = Space::rect(2, 3);
  const Space w25 = Space::wedge(2, 5);
  const InvariantForm quad = InvariantForm::parse("quadric:4", k);
  for (std::size_t i = 0; i < kMinimalTrials; ++i) {
    Rng rng(derive_seed(kSeed + 10, i));
    const std::int64_t h = k.is_rational() ? 3 : static_cast<std::int64_t>(k.modulus());
    // rank-one 2 x 3 under X -> A X B
    {
      const PreserverElement t(rect, k, Sandwich{random_invertible(2, k, h, rng), random_invertible(3, k, h, rng)});
      std::vector<FieldElement> u{field_sample_nonzero(k, 5, rng), field_sample(k, 5, rng)};
      std::vector<FieldElement> c{field_sample_nonzero(k, 5, rng), field_sample(k, 5, rng), field_sample(k, 5, rng)};
      std::vector<FieldElement> e;
      for (const auto& a : u)
        for (const auto& b : c) e.push_back(a * b);
      if (rank(to_matrix(apply(t, RepVector(rect, e)))) != 1) ++bad;
    }
    // decomposable u ^ v in wedge^2 k^5 under c wedge^2 g
    {
      const PreserverElement t(w25, k, WedgePush{field_sample_nonzero(k, 5, rng), random_invertible(5, k, h, rng)});
      std::vector<std::vector<FieldElement>> vs(2);
      for (auto& v : vs)
        for (int j = 0; j < 5; ++j) v.push_back(field_sample_int(k, -4, 4, rng));
      const RepVector v(w25, wedge::decomposable(vs));
      if (v.is_zero()) continue;
      if (wedge_annihilator_dim(apply(t, v)) != 2) ++bad;
    }
    // isotropic vectors under orthogonal maps times a scalar
    {
      const Matrix g = random_orthogonal(quad.gram(), rng) * field_sample_nonzero(k, 5, rng);
      const PreserverElement t(quad.space(), k, GenericMap{g});
      if (!minimal_by_rank(quad, apply(t, sample_minimal(quad, rng))).is_minimal) ++bad;
    }
  }
  d << " rect(2x3)/wedge(2,5)/quadric:4 " << k.descriptor() << ' ' << 3 * kMinimalTrials - bad << '/'
    << 3 * kMinimalTrials;
  return bad;
}

Outcome criterion_minimality() {
  std::size_t total = 0;
  Outcome o = run_suites(&minimality_suite, kMinimalTrials, &total, nullptr);
  std::ostringstream d;
  d << total << " minimal elements through constraint-free family elements;";
  for (const Field& k : fields())
    if (extra_minimality(k, d) != 0) o.passed = false;
  o.detail = d.str() + o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "forward soundness", criterion_forward},
      {2, "character law", criterion_character},
      {3, "cubic minimality oracles over F5",
       [] { return census(case_cubic_oracles_f5(), kOracleBudget, "vectors minimal_rank disagreements"); }},
      {4, "scalar fixers on Symm2(F3)",
       [] { return census(case_scalar_fixer(), kFixerBudget, "invertible_maps fixers scalar_fixers"); }},
      {5, "symbolic identities", criterion_symbolic},
      {6, "wedge36 calibration", criterion_calibration},
      {7, "hyperdet vs det(XSX^t)", criterion_ratio},
      {8, "falsification", criterion_falsification},
      {9, "cubic preserver census over F5",
       [] {
         return census(case_cubic_preserver_census_f5(), kCensusBudget,
                       "pairs filtered_pairs preserving_pairs exceptions distinct_induced_maps");
       }},
      {10, "minimality preservation", criterion_minimality},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.passed;
    std::printf("%s criterion %d (%s): %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "all criteria pass" : "some criteria FAILED");
  return all ? 0 : 1;
}
