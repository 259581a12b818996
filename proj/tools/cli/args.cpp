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

#include <CLI11.hpp>

#include <map>
#include <ostream>

#include "run.hpp"

namespace plp::cli {

namespace {

void add_source(CLI::App* sub, RunConfig& cfg, bool with_preset) {
  auto* inst = sub->add_option("--instance", cfg.instance_path, "instance JSON file");
  if (with_preset) {
    auto* pre = sub->add_option("--preset", cfg.preset,
                                "pca-nand-vertex | pca-nand-edge | broadcast-nand | broadcast-imp");
    inst->excludes(pre);
    sub->add_option("--ell", cfg.ell, "potential length for presets")->check(CLI::Range(1, 6));
    sub->add_option("--s0", cfg.s0, "0/1 string for PCA presets");
  }
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--degree-cap", cfg.degree_cap, "cap on c, deg p and deg q1")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--output,-o", cfg.output_path, "write the JSON payload here");
  sub->add_option("--log-level", cfg.log_level, "trace | debug | info | warn | error | off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));
}

}  // namespace

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Local feasibility of one-parameter linear programs"};
  app.require_subcommand(1, 1);

  const std::map<std::string, SideChoice> sides{
      {"pos", SideChoice::kPos}, {"neg", SideChoice::kNeg}, {"both", SideChoice::kBoth}};

  auto* solve = app.add_subcommand("solve", "classify an instance near 0");
  add_source(solve, cfg, true);
  solve->add_option("--side", cfg.side, "pos | neg | both")
      ->transform(CLI::CheckedTransformer(sides, CLI::ignore_case));
  add_common(solve, cfg);

  auto* optimize = app.add_subcommand("optimize", "local optimization at 0+");
  add_source(optimize, cfg, false);
  add_common(optimize, cfg);

  auto* eval = app.add_subcommand("eval-point", "exact LP feasibility at one delta");
  add_source(eval, cfg, true);
  eval->add_option("--delta", cfg.delta, "rational value such as 1/20")->required();
  add_common(eval, cfg);

  auto* find = app.add_subcommand("find-potential", "search potentials for a preset");
  find->add_option("--preset", cfg.preset, "automaton preset")->required();
  find->add_option("--ell", cfg.ell, "single potential length (default: 2 then 3)")
      ->check(CLI::Range(1, 6));
  find->add_option("--s0", cfg.s0, "single s0 (default: every 0/1 string up to ell)");
  add_common(find, cfg);

  auto* verify = app.add_subcommand("verify-potential", "check a potential file");
  verify->add_option("--preset", cfg.preset, "automaton preset")->required();
  verify->add_option("--potential", cfg.potential_path, "potential JSON file")->required();
  verify->add_option("--s0", cfg.s0, "override the preset's s0");
  add_common(verify, cfg);

  auto* check = app.add_subcommand("check-certificate", "audit a certificate file");
  add_source(check, cfg, true);
  check->add_option("--certificate", cfg.certificate_path, "certificate JSON file")->required();
  add_common(check, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  const std::pair<CLI::App*, Command> table[] = {
      {solve, Command::kSolve},
      {optimize, Command::kOptimize},
      {eval, Command::kEvalPoint},
      {find, Command::kFindPotential},
      {verify, Command::kVerifyPotential},
      {check, Command::kCheckCertificate}};
  for (const auto& [sub, cmd] : table) {
    if (sub->parsed()) cfg.command = cmd;
  }
  return cfg;
}

}  // namespace plp::cli
