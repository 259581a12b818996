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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "plp/serialization.hpp"

namespace plp {
namespace {

std::string data(const std::string& rel) { return std::string(PLP_DATA_DIR) + "/" + rel; }

std::string error_of(const std::string& text, PlpInstance (*parse)(const Json&)) {
  try {
    parse(parse_json(text));
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

TEST(Serialization, PolyRoundTrip) {
  Poly p({Rat(-3, 7), Rat(0), Rat(123456789, 1000)});
  EXPECT_EQ(poly_to_json(p), Json::parse(R"(["-3/7", "0", "123456789/1000"])"));
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
  EXPECT_EQ(poly_from_json(Json::parse("[]")), Poly());
  RatFunc f(Poly({1, 2}), Poly({0, 0, 3}));
  EXPECT_EQ(ratfunc_from_json(ratfunc_to_json(f)), f);
}

TEST(Serialization, ToyInstanceFile) {
  PlpInstance inst = instance_from_json(read_json_file(data("instances/toy.json")));
  EXPECT_EQ(inst, fixtures::toy_instance());
  EXPECT_EQ(instance_from_json(instance_to_json(inst)), inst);
}

TEST(Serialization, SenseConversion) {
  auto inst = instance_from_json(parse_json(R"({"n": 1, "constraints": [
      {"row": [["2"]], "rhs": ["1"], "sense": "<="},
      {"row": [["1"]], "rhs": ["0", "1"], "sense": "="}]})"));
  ASSERT_EQ(inst.m(), 3u);
  EXPECT_EQ(inst.A.at(0, 0), Poly({-2}));
  EXPECT_EQ(inst.b[0], Poly({-1}));
  EXPECT_EQ(inst.A.at(1, 0), Poly({1}));
  EXPECT_EQ(inst.A.at(2, 0), Poly({-1}));
  EXPECT_EQ(inst.b[2], Poly({0, -1}));
}

TEST(Serialization, DistinctDiagnostics) {
  std::string malformed = error_of("{\"n\": 1,", instance_from_json);
  std::string mismatch =
      error_of(R"({"n": 2, "constraints": [{"row": [["1"]], "rhs": []}]})", instance_from_json);
  std::string bad_rat =
      error_of(R"({"n": 1, "constraints": [{"row": [["1/0"]], "rhs": []}]})", instance_from_json);
  std::string missing = error_of(R"({"constraints": []})", instance_from_json);
  EXPECT_NE(malformed.find("malformed JSON"), std::string::npos);
  EXPECT_NE(mismatch.find("dimension mismatch"), std::string::npos);
  EXPECT_NE(bad_rat.find("malformed rational"), std::string::npos);
  EXPECT_NE(missing.find("missing field 'n'"), std::string::npos);
}

TEST(Serialization, CertificateFixedPoint) {
  PlpInstance inst = fixtures::toy_instance();
  LocalClassification cls = classify_local(inst);
  for (const auto* cert : {&cls.negative, &cls.positive}) {
    const std::string first = certificate_to_json(*cert).dump(2);
    SideCertificate back = certificate_from_json(parse_json(first));
    EXPECT_EQ(certificate_to_json(back).dump(2), first);
    EXPECT_EQ(back.verdict, cert->verdict);
    EXPECT_EQ(back.solution, cert->solution);
  }
  Json bad = certificate_to_json(cls.negative);
  bad["schema_version"] = 7;
  EXPECT_THROW(certificate_from_json(bad), FormatError);
}

TEST(Serialization, ParsedCertificateStillChecks) {
  PlpInstance inst = fixtures::toy_instance();
  SideCertificate cert = solve_side(inst, Side::kNegative);
  ASSERT_EQ(cert.verdict, Verdict::kFeasible);
  SideCertificate back = certificate_from_json(certificate_to_json(cert));
  EXPECT_TRUE(check_certificate(inst, back));
}

TEST(Serialization, PotentialFiles) {
  for (const char* name : {"pca_nand_vertex", "pca_nand_edge", "broadcast_nand", "broadcast_imp"}) {
    Json j = read_json_file(data(std::string("potentials/") + name + ".json"));
    Potential w = potential_from_json(j);
    EXPECT_EQ(w.length, 3);
    EXPECT_EQ(potential_from_json(potential_to_json(w)), w);
  }
  Potential nand = potential_from_json(read_json_file(data("potentials/broadcast_nand.json")));
  EXPECT_EQ(nand.shared_den, Poly({Rat(1), Rat(509, 216)}));
  EXPECT_TRUE(nand.coeffs[Pattern("000").index()].is_zero());
  EXPECT_EQ(nand.coeffs[Pattern("?11").index()], Poly({Rat(1), Rat(73, 432)}));
}

TEST(Serialization, PotentialErrors) {
  EXPECT_THROW(potential_from_json(parse_json(R"({"length": 2, "coeffs": {"0": ["1"]}})")),
               FormatError);
  EXPECT_THROW(potential_from_json(parse_json(R"({"length": 1, "coeffs": {"x": ["1"]}})")),
               FormatError);
  EXPECT_THROW(
      potential_from_json(parse_json(R"({"length": 1, "shared_den": ["-1"], "coeffs": {}})")),
      FormatError);
}

TEST(Serialization, ParamLpRoundTrip) {
  ParamLp lp{{Poly({1}), Poly({0, 1})}, PolyMatrix(1, 2), {Poly({0, 1})}};
  lp.A.at(0, 0) = Poly({1});
  lp.A.at(0, 1) = Poly({Rat(1, 2)});
  Json j = param_lp_to_json(lp);
  EXPECT_EQ(j["convention"], "max-le-nonneg");
  ParamLp back = param_lp_from_json(j);
  EXPECT_EQ(back.c, lp.c);
  EXPECT_EQ(back.A, lp.A);
  EXPECT_EQ(back.b, lp.b);
  j["convention"] = "min-ge";
  EXPECT_THROW(param_lp_from_json(j), FormatError);
}

}  // namespace
}  // namespace plp
