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

#include "preserver/json_io.hpp"

#include <stdexcept>

namespace preserver {

Json to_json(const FieldElement& x) { return x.to_string(); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Space& s) {
  Json params = Json::object();
  switch (s.kind) {
    case SpaceKind::Symm:
    case SpaceKind::Alt:
    case SpaceKind::Square:
    case SpaceKind::Vector: params["n"] = s.n; break;
    case SpaceKind::Rect:
      params["m"] = s.m;
      params["n"] = s.n;
      break;
    case SpaceKind::Wedge:
      params["d"] = s.d;
      params["n"] = s.n;
      break;
    default: break;
  }
  return Json{{"space", s.tag()}, {"params", params}};
}

Json to_json(const RepVector& v) {
  Json j = to_json(v.space);
  Json entries = Json::array();
  for (const auto& c : v.coords) entries.push_back(c.to_string());
  j["entries"] = std::move(entries);
  return j;
}

namespace {

Json perm_json(const Perm3& p) { return Json::array({p[0], p[1], p[2]}); }

struct ParamsVisitor {
  Json operator()(const Congruence& x) const {
    return {{"r", to_json(x.r)}, {"P", to_json(x.p)}, {"hodge", x.hodge}};
  }
  Json operator()(const Sandwich& x) const { return {{"A", to_json(x.a)}, {"B", to_json(x.b)}}; }
  Json operator()(const TransposeSandwich& x) const { return {{"A", to_json(x.a)}, {"B", to_json(x.b)}}; }
  Json operator()(const HodgeStar4&) const { return Json::object(); }
  Json operator()(const HodgeStar20&) const { return Json::object(); }
  Json operator()(const CubicComposition& x) const { return {{"c", to_json(x.c)}, {"g", to_json(x.g)}}; }
  Json operator()(const WedgePush& x) const {
    return {{"c", to_json(x.c)}, {"g", to_json(x.g)}, {"hodge", x.hodge}};
  }
  Json operator()(const GSp6Elem& x) const {
    return {{"c", to_json(x.c)}, {"g", to_json(x.g)}, {"mu", to_json(x.mu)}};
  }
  Json operator()(const TriplePush& x) const {
    return {{"g1", to_json(x.g1)}, {"g2", to_json(x.g2)}, {"g3", to_json(x.g3)}, {"sigma", perm_json(x.sigma)}};
  }
  Json operator()(const FactorPermutation& x) const { return {{"sigma", perm_json(x.sigma)}}; }
  Json operator()(const GOPair& x) const {
    return {{"g1", to_json(x.g1)}, {"g2", to_json(x.g2)}, {"mu", to_json(x.mu)}, {"S", to_json(x.s)}};
  }
  Json operator()(const GenericMap& x) const { return {{"M", to_json(x.m)}}; }
};

}  // namespace

Json to_json(const PreserverElement& t) {
  return Json{{"family", t.family()}, {"space", to_json(t.space())}, {"params", std::visit(ParamsVisitor{}, t.data())}};
}

Json to_json(const Counterexample& c) {
  Json j{{"input", to_json(c.input)}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}};
  if (c.second) j["second"] = to_json(*c.second);
  return j;
}

Json to_json(const Verdict& v) {
  Json j{{"passed", v.passed}, {"policy", v.policy}, {"points", v.points}};
  if (v.scalar) j["scalar"] = to_json(*v.scalar);
  if (v.error_bound) j["error_bound"] = v.error_bound->get_str();
  if (v.counterexample) j["counterexample"] = to_json(*v.counterexample);
  return j;
}

Json to_json(const MinimalityVerdict& v) {
  Json j{{"is_minimal", v.is_minimal}, {"oracle", oracle_name(v.oracle)}};
  if (!v.witness.empty()) {
    Json w = Json::array();
    for (const auto& x : v.witness) w.push_back(to_json(x));
    j["witness"] = Json{{"kind", v.witness_kind}, {"values", w}};
  }
  j["trials"] = v.trials;
  return j;
}

Json to_json(const SuiteResult& s) {
  Json j{{"suite", s.name},       {"form", s.form},         {"family", s.family},
         {"policy", s.policy},    {"trials", s.trials},     {"failures", s.failures},
         {"passed", s.passed()}};
  if (s.error_bound) j["error_bound"] = s.error_bound->get_str();
  if (s.first_failure) {
    const auto& f = *s.first_failure;
    Json fj{{"trial", f.trial}, {"message", f.message}};
    if (f.element) fj["element"] = to_json(*f.element);
    if (f.counterexample) fj["counterexample"] = to_json(*f.counterexample);
    j["first_failure"] = std::move(fj);
  }
  return j;
}

Json to_json(const CorollaryReport& r) {
  Json suites = Json::array();
  for (const auto& s : r.suites) suites.push_back(to_json(s));
  return Json{{"corollary", r.corollary}, {"field", r.field},   {"seed", r.seed},
              {"trials", r.trials},       {"policy", r.policy}, {"passed", r.passed()},
              {"suites", std::move(suites)}};
}

Json to_json(const CensusReport& r) {
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  Json expected = Json::object();
  for (const auto& [k, v] : r.expected) expected[k] = v;
  return Json{{"case", r.case_id}, {"field", r.field},       {"total", r.total},
              {"passed", r.passed}, {"counts", std::move(counts)}, {"expected", std::move(expected)}};
}

namespace {

std::size_t param(const Json& params, const char* key) {
  if (!params.is_object() || !params.contains(key) || !params[key].is_number_unsigned()) {
    throw std::invalid_argument(std::string("missing or invalid space parameter '") + key + "'");
  }
  return params[key].get<std::size_t>();
}

}  // namespace

Space space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("space") || !j["space"].is_string()) {
    throw std::invalid_argument("expected an object with a string 'space'");
  }
  const std::string tag = j["space"].get<std::string>();
  const Json params = j.value("params", Json::object());
  if (tag == "symm") return Space::symm(param(params, "n"));
  if (tag == "alt") return Space::alt(param(params, "n"));
  if (tag == "square") return Space::square(param(params, "n"));
  if (tag == "vector") return Space::vector(param(params, "n"));
  if (tag == "rect") return Space::rect(param(params, "m"), param(params, "n"));
  if (tag == "wedge") return Space::wedge(param(params, "d"), param(params, "n"));
  if (tag == "wedge3-0") return Space::wedge3_sp();
  if (tag == "cubic") return Space::cubic();
  if (tag == "tritensor") return Space::tritensor();
  throw std::invalid_argument("unknown space tag: " + tag);
}

RepVector repvector_from_json(const Json& j, const Field& f) {
  const Space s = space_from_json(j);
  if (!j.contains("entries") || !j["entries"].is_array()) throw std::invalid_argument("missing 'entries' array");
  std::vector<FieldElement> coords;
  for (const auto& e : j["entries"]) {
    if (e.is_string()) {
      coords.push_back(parse_element(f, e.get<std::string>()));
    } else if (e.is_number_integer()) {
      coords.push_back(f.from_int(e.get<std::int64_t>()));
    } else {
      throw std::invalid_argument("entries must be strings or integers");
    }
  }
  if (coords.size() != s.coord_count()) {
    throw std::invalid_argument("expected " + std::to_string(s.coord_count()) + " entries for " + s.describe() +
                                ", got " + std::to_string(coords.size()));
  }
  return RepVector(s, std::move(coords));
}

}  // namespace preserver
