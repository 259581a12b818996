// Copyright 2026 The plp Authors
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

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "plp/optimize.hpp"
#include "plp/potential.hpp"
#include "plp/solver.hpp"

namespace plp {

inline constexpr int kSchemaVersion = 1;

/// Malformed or dimensionally inconsistent input. what() names the offending
/// field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);
Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

/// {"n", "constraints": [{"row", "rhs", "sense"}]}. Rows with sense "<=" are
/// negated on input and "=" becomes a pair of rows.
Json instance_to_json(const PlpInstance& inst);
PlpInstance instance_from_json(const Json& j);

/// Instance format plus "objective" and "convention": "max-le-nonneg".
Json param_lp_to_json(const ParamLp& lp);
ParamLp param_lp_from_json(const Json& j);

/// The certifying polynomials travel with the radius.
Json certificate_to_json(const SideCertificate& cert);
SideCertificate certificate_from_json(const Json& j);

Json classification_to_json(const LocalClassification& cls);
Json opt_outcome_to_json(const OptOutcome& out);

/// {"length", "shared_den", "coeffs": {pattern: poly}}; absent patterns are 0.
Json potential_to_json(const Potential& w);
Potential potential_from_json(const Json& j);

/// Parses text, mapping parse errors to FormatError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace plp
