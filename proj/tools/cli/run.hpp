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

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace plp::cli {

enum class Command { kSolve, kOptimize, kEvalPoint, kFindPotential, kVerifyPotential, kCheckCertificate };
enum class SideChoice { kPos, kNeg, kBoth };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUnknownAtCap = 2;

/// Environment variable read when --degree-cap is absent.
inline constexpr const char* kDegreeCapEnv = "PLP_DEGREE_CAP";

struct RunConfig {
  Command command = Command::kSolve;
  std::optional<std::string> instance_path;
  std::optional<std::string> preset;
  SideChoice side = SideChoice::kBoth;
  std::optional<int> degree_cap;
  std::optional<std::string> output_path;
  std::string log_level = "warn";

  std::optional<int> ell;
  std::optional<std::string> s0;
  std::optional<std::string> delta;
  std::optional<std::string> potential_path;
  std::optional<std::string> certificate_path;
};

/// Parses argv. On --help or a usage error the exit code to return instead.
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                        std::ostream& err);

/// Runs one command. The human-readable summary goes to out; the JSON payload
/// goes to output_path, or to out after the summary when none is given.
/// Diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace plp::cli
