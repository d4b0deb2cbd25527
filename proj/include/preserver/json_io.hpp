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

// JSON encodings. Scalars are strings ("p/q" or "n"); matrices are arrays of rows.

#include <json.hpp>

#include "preserver/bruteforce.hpp"
#include "preserver/minimality.hpp"
#include "preserver/preservers.hpp"
#include "preserver/verify.hpp"

namespace preserver {

using Json = nlohmann::ordered_json;

Json to_json(const FieldElement& x);
Json to_json(const Matrix& m);
Json to_json(const Space& s);
/// {"space": tag, "params": {...}, "entries": [...]}.
Json to_json(const RepVector& v);
/// {"family": ..., "params": {...}}.
Json to_json(const PreserverElement& t);
Json to_json(const Counterexample& c);
Json to_json(const Verdict& v);
Json to_json(const MinimalityVerdict& v);
Json to_json(const SuiteResult& s);
Json to_json(const CorollaryReport& r);
/// Counts only; elapsed time is left out so reports are reproducible.
Json to_json(const CensusReport& r);

/// Throws std::invalid_argument on malformed input or a coordinate count mismatch.
Space space_from_json(const Json& j);
RepVector repvector_from_json(const Json& j, const Field& f);

}  // namespace preserver
