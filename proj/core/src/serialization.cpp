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

#include "plp/serialization.hpp"

#include <fstream>
#include <sstream>

namespace plp {

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::optional<int> optional_int(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return j.at(key).get<int>();
}

Json optional_to_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Side side_from(const std::string& s) {
  if (s == "positive") return Side::kPositive;
  if (s == "negative") return Side::kNegative;
  fail("unknown side '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
  if (s == "feasible") return Verdict::kFeasible;
  if (s == "infeasible") return Verdict::kInfeasible;
  if (s == "unknown-at-cap") return Verdict::kUnknownAtCap;
  fail("unknown verdict '" + s + "'");
}

const char* witness_name(RootWitness w) {
  return w == RootWitness::kNoPositiveRoot ? "no-positive-root" : "isolated-below-root";
}

struct ParsedRows {
  std::size_t n = 0;
  std::vector<std::vector<Poly>> rows;
  std::vector<Poly> rhs;
};

// Every row in >= form.
ParsedRows parse_rows(const Json& j) {
  ParsedRows out;
  out.n = size_field(j, "n");
  const Json& cons = field(j, "constraints");
  if (!cons.is_array()) fail("'constraints' must be an array");
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const Json& c = cons[i];
    const std::string where = "constraint " + std::to_string(i);
    const Json& row = field(c, "row");
    if (!row.is_array() || row.size() != out.n) {
      fail("dimension mismatch: " + where + " has a row of length " +
           std::to_string(row.is_array() ? row.size() : 0) + ", expected " + std::to_string(out.n));
    }
    std::vector<Poly> coeffs;
    for (const auto& p : row) coeffs.push_back(poly_from_json(p));
    Poly rhs = poly_from_json(field(c, "rhs"));
    std::string sense = c.contains("sense") ? c.at("sense").get<std::string>() : ">=";
    if (sense == ">=" || sense == "=") {
      out.rows.push_back(coeffs);
      out.rhs.push_back(rhs);
    }
    if (sense == "<=" || sense == "=") {
      for (auto& a : coeffs) a = -a;
      out.rows.push_back(std::move(coeffs));
      out.rhs.push_back(-rhs);
    }
    if (sense != ">=" && sense != "<=" && sense != "=") fail(where + ": unknown sense '" + sense + "'");
  }
  return out;
}

PolyMatrix to_matrix(const std::vector<std::vector<Poly>>& rows, std::size_t n) {
  PolyMatrix A(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) A.at(i, j) = rows[i][j];
  }
  return A;
}

Json rows_to_json(const PolyMatrix& A, const std::vector<Poly>& b, const char* sense) {
  Json cons = Json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(poly_to_json(A.at(i, j)));
    cons.push_back(Json{{"row", std::move(row)}, {"rhs", poly_to_json(b[i])}, {"sense", sense}});
  }
  return cons;
}

}  // namespace

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(format_rat(c));
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) fail("polynomial must be an array of rational strings");
  std::vector<Rat> coeffs;
  for (const auto& c : j) {
    if (c.is_string()) {
      try {
        coeffs.push_back(parse_rat(c.get<std::string>()));
      } catch (const std::invalid_argument&) {
        fail("malformed rational '" + c.get<std::string>() + "'");
      }
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      fail("polynomial coefficient must be a string");
    }
  }
  return Poly(std::move(coeffs));
}

Json ratfunc_to_json(const RatFunc& f) {
  return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFunc ratfunc_from_json(const Json& j) {
  Poly den = poly_from_json(field(j, "den"));
  if (den.is_zero()) fail("rational function with zero denominator");
  return RatFunc(poly_from_json(field(j, "num")), std::move(den));
}

Json instance_to_json(const PlpInstance& inst) {
  inst.validate();
  return Json{{"n", inst.n()}, {"constraints", rows_to_json(inst.A, inst.b, ">=")}};
}

PlpInstance instance_from_json(const Json& j) {
  ParsedRows rows = parse_rows(j);
  return PlpInstance{to_matrix(rows.rows, rows.n), std::move(rows.rhs)};
}

Json param_lp_to_json(const ParamLp& lp) {
  lp.validate();
  Json obj = Json::array();
  for (const auto& c : lp.c) obj.push_back(poly_to_json(c));
  return Json{{"n", lp.A.cols()},
              {"convention", "max-le-nonneg"},
              {"objective", std::move(obj)},
              {"constraints", rows_to_json(lp.A, lp.b, "<=")}};
}

ParamLp param_lp_from_json(const Json& j) {
  if (j.contains("convention") && j.at("convention") != "max-le-nonneg") {
    fail("unsupported convention; expected 'max-le-nonneg'");
  }
  ParsedRows rows = parse_rows(j);
  // parse_rows stores >= rows; the optimization form wants A x <= b.
  for (auto& row : rows.rows) {
    for (auto& a : row) a = -a;
  }
  for (auto& r : rows.rhs) r = -r;
  ParamLp lp{{}, to_matrix(rows.rows, rows.n), std::move(rows.rhs)};
  const Json& obj = field(j, "objective");
  if (!obj.is_array() || obj.size() != rows.n) fail("dimension mismatch: objective length differs from n");
  for (const auto& p : obj) lp.c.push_back(poly_from_json(p));
  return lp;
}

Json certificate_to_json(const SideCertificate& cert) {
  Json out{{"schema_version", kSchemaVersion},
           {"side", to_string(cert.side)},
           {"verdict", to_string(cert.verdict)},
           {"c", optional_to_json(cert.c_used)},
           {"deg_p", optional_to_json(cert.deg_p_used)},
           {"deg_q1", optional_to_json(cert.deg_q1_used)},
           {"degree_bound", cert.degree_bound},
           {"searched_cap", cert.searched_cap}};
  Json sol = Json::array();
  for (const auto& x : cert.solution) sol.push_back(ratfunc_to_json(x));
  out["solution"] = std::move(sol);
  if (cert.radius) {
    out["radius"] = Json{{"value", format_rat(cert.radius->value)},
                         {"witness", witness_name(cert.radius->witness)}};
    Json polys = Json::array();
    for (const auto& p : cert.radius->certifying_polys) polys.push_back(poly_to_json(p));
    out["certifying_polynomials"] = std::move(polys);
  } else {
    out["radius"] = nullptr;
    out["certifying_polynomials"] = Json::array();
  }
  return out;
}

SideCertificate certificate_from_json(const Json& j) {
  const int version = static_cast<int>(size_field(j, "schema_version"));
  if (version != kSchemaVersion) fail("unsupported schema_version " + std::to_string(version));
  SideCertificate cert;
  cert.side = side_from(field(j, "side").get<std::string>());
  cert.verdict = verdict_from(field(j, "verdict").get<std::string>());
  cert.c_used = optional_int(j, "c");
  cert.deg_p_used = optional_int(j, "deg_p");
  cert.deg_q1_used = optional_int(j, "deg_q1");
  cert.degree_bound = optional_int(j, "degree_bound").value_or(0);
  cert.searched_cap = optional_int(j, "searched_cap").value_or(0);
  const Json& sol = field(j, "solution");
  if (!sol.is_array()) fail("'solution' must be an array");
  for (const auto& x : sol) cert.solution.push_back(ratfunc_from_json(x));
  if (j.contains("radius") && !j.at("radius").is_null()) {
    const Json& r = j.at("radius");
    RootBound rb;
    try {
      rb.value = parse_rat(field(r, "value").get<std::string>());
    } catch (const std::invalid_argument&) {
      fail("malformed radius value");
    }
    const std::string w = field(r, "witness").get<std::string>();
    if (w == "no-positive-root") {
      rb.witness = RootWitness::kNoPositiveRoot;
    } else if (w == "isolated-below-root") {
      rb.witness = RootWitness::kIsolatedBelowRoot;
    } else {
      fail("unknown radius witness '" + w + "'");
    }
    if (j.contains("certifying_polynomials")) {
      for (const auto& p : j.at("certifying_polynomials")) rb.certifying_polys.push_back(poly_from_json(p));
    }
    cert.radius = std::move(rb);
  }
  return cert;
}

Json classification_to_json(const LocalClassification& cls) {
  Json origin{{"status", cls.origin.status == LpStatus::kInfeasible ? "infeasible" : "feasible"}};
  if (cls.origin.witness) {
    Json x = Json::array();
    for (const auto& v : *cls.origin.witness) x.push_back(format_rat(v));
    origin["witness"] = std::move(x);
  }
  return Json{{"schema_version", kSchemaVersion},
              {"summary", to_string(cls.summary)},
              {"negative", certificate_to_json(cls.negative)},
              {"origin", std::move(origin)},
              {"positive", certificate_to_json(cls.positive)}};
}

Json opt_outcome_to_json(const OptOutcome& out) {
  Json j{{"schema_version", kSchemaVersion}, {"status", to_string(out.status)}};
  auto vec = [](const std::optional<std::vector<RatFunc>>& v) {
    if (!v) return Json(nullptr);
    Json a = Json::array();
    for (const auto& f : *v) a.push_back(ratfunc_to_json(f));
    return a;
  };
  j["x"] = vec(out.x);
  j["y"] = vec(out.y);
  j["value"] = out.value ? ratfunc_to_json(*out.value) : Json(nullptr);
  j["radius"] = out.radius ? Json(format_rat(out.radius->value)) : Json(nullptr);
  Json stages = Json::array();
  for (const auto& s : out.stages) stages.push_back(to_string(s.verdict));
  j["stages"] = std::move(stages);
  return j;
}

Json potential_to_json(const Potential& w) {
  Json coeffs = Json::object();
  for (std::size_t s = 0; s < w.coeffs.size(); ++s) {
    if (!w.coeffs[s].is_zero()) coeffs[Pattern::from_index(s, w.length).str()] = poly_to_json(w.coeffs[s]);
  }
  return Json{{"length", w.length}, {"shared_den", poly_to_json(w.shared_den)}, {"coeffs", std::move(coeffs)}};
}

Potential potential_from_json(const Json& j) {
  const std::size_t length = size_field(j, "length");
  if (length < 1 || length > 8) fail("potential length must be in 1..8");
  Potential w = Potential::zero(static_cast<int>(length));
  if (j.contains("shared_den")) w.shared_den = poly_from_json(j.at("shared_den"));
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) fail("'coeffs' must map patterns to polynomials");
  for (const auto& [key, value] : coeffs.items()) {
    std::optional<Pattern> p;
    try {
      p.emplace(key);
    } catch (const std::invalid_argument&) {
      fail("malformed pattern '" + key + "'");
    }
    if (p->length() != w.length) fail("pattern '" + key + "' does not have the potential's length");
    w.coeffs[p->index()] = poly_from_json(value);
  }
  try {
    w.validate();
  } catch (const std::exception& e) {
    fail(e.what());
  }
  return w;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace plp
