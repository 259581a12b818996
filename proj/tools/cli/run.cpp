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

#include "run.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "plp/optimize.hpp"
#include "plp/potential.hpp"
#include "plp/serialization.hpp"

namespace plp::cli {

namespace {

/// Bad input detected after parsing; message is printed as the diagnostic.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Preset {
  AutomatonKind kind;
  TransitionTable table;
  std::optional<Pattern> s0;
};

Preset preset_named(const std::string& name) {
  if (name == "pca-nand-vertex") return {AutomatonKind::kPca, TransitionTable::vertex_nand(), Pattern("01")};
  if (name == "pca-nand-edge") return {AutomatonKind::kPca, TransitionTable::edge_nand(), Pattern("10")};
  if (name == "broadcast-nand") return {AutomatonKind::kBroadcast, TransitionTable::edge_nand(), std::nullopt};
  if (name == "broadcast-imp") return {AutomatonKind::kBroadcast, TransitionTable::imp(), std::nullopt};
  throw InputError("unknown preset '" + name + "'");
}

std::optional<Pattern> s0_for(const RunConfig& cfg, const Preset& preset) {
  if (preset.kind == AutomatonKind::kBroadcast) {
    if (cfg.s0) throw InputError("--s0 applies to PCA presets only");
    return std::nullopt;
  }
  if (!cfg.s0) return preset.s0;
  try {
    return Pattern(*cfg.s0);
  } catch (const std::invalid_argument&) {
    throw InputError("malformed --s0 '" + *cfg.s0 + "'");
  }
}

std::optional<int> env_cap() {
  const char* raw = std::getenv(kDegreeCapEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > 100000) {
    throw InputError(std::string(kDegreeCapEnv) + " must be a nonnegative integer");
  }
  return static_cast<int>(v);
}

SolveOptions solve_options(const RunConfig& cfg, std::shared_ptr<spdlog::logger> log) {
  SolveOptions opts;
  opts.degree_cap = cfg.degree_cap ? cfg.degree_cap : env_cap();
  opts.observer = [log](const CandidateEvent& e) {
    log->info("candidate side={} c={} deg_p={} deg_q1={} feasible={} lp_calls={} rounds={} "
              "promotions={} pivots={} seconds={:.4f}",
              to_string(e.side), e.c, e.deg_p, e.deg_q1, e.feasible, e.stats.lp_calls,
              e.stats.rounds, e.stats.promotions, e.stats.lp.pivots, e.seconds);
  };
  return opts;
}

PlpInstance load_instance(const RunConfig& cfg) {
  if (cfg.instance_path) {
    PlpInstance inst = instance_from_json(read_json_file(*cfg.instance_path));
    return inst;
  }
  if (!cfg.preset) throw InputError("one of --instance or --preset is required");
  Preset p = preset_named(*cfg.preset);
  return assemble(p.kind, p.table, cfg.ell.value_or(3), s0_for(cfg, p));
}

void emit(const RunConfig& cfg, const Json& payload, std::ostream& out) {
  const std::string text = payload.dump(2) + "\n";
  if (!cfg.output_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.output_path);
  if (!file) throw InputError("cannot write '" + *cfg.output_path + "'");
  file << text;
}

std::string describe(const SideCertificate& cert) {
  std::string s = std::string(to_string(cert.side)) + ": " + to_string(cert.verdict);
  if (cert.verdict == Verdict::kFeasible) {
    s += " (c=" + std::to_string(*cert.c_used) + ", deg p=" + std::to_string(*cert.deg_p_used) +
         ", deg q1=" + std::to_string(*cert.deg_q1_used) + ", radius " +
         format_rat(cert.radius->value) + ")";
  } else {
    s += " (searched cap " + std::to_string(cert.searched_cap) + " of bound " +
         std::to_string(cert.degree_bound) + ")";
  }
  return s;
}

int exit_for(Verdict v) { return v == Verdict::kUnknownAtCap ? kExitUnknownAtCap : kExitOk; }

int do_solve(const RunConfig& cfg, const SolveOptions& opts, std::ostream& out) {
  PlpInstance inst = load_instance(cfg);
  SolveOptions o = opts;
  if (cfg.preset && !o.degree_cap) o.degree_cap = kDefaultAutomataDegreeCap;
  out << "instance: " << inst.m() << " constraints, " << inst.n() << " variables, degree "
      << inst.max_degree() << "\n";
  if (cfg.side == SideChoice::kBoth) {
    LocalClassification cls = classify_local(inst, o);
    out << describe(cls.negative) << "\n"
        << "origin: " << (cls.origin.status == LpStatus::kInfeasible ? "infeasible" : "feasible") << "\n"
        << describe(cls.positive) << "\n"
        << "summary: " << to_string(cls.summary) << "\n";
    emit(cfg, classification_to_json(cls), out);
    return cls.summary == Summary::kUnknown ? kExitUnknownAtCap : kExitOk;
  }
  Side side = cfg.side == SideChoice::kPos ? Side::kPositive : Side::kNegative;
  SideCertificate cert = solve_side(inst, side, o);
  out << describe(cert) << "\n";
  emit(cfg, certificate_to_json(cert), out);
  return exit_for(cert.verdict);
}

int do_optimize(const RunConfig& cfg, const SolveOptions& opts, std::ostream& out) {
  if (!cfg.instance_path) throw InputError("optimize needs --instance");
  ParamLp lp = param_lp_from_json(read_json_file(*cfg.instance_path));
  OptOutcome res = solve_local_opt(lp, opts);
  out << "status: " << to_string(res.status) << "\n";
  if (res.value) out << "value: " << res.value->to_string() << "\n";
  if (res.radius) out << "radius: " << format_rat(res.radius->value) << "\n";
  emit(cfg, opt_outcome_to_json(res), out);
  return res.status == OptStatus::kUnknownAtCap ? kExitUnknownAtCap : kExitOk;
}

int do_eval(const RunConfig& cfg, std::ostream& out) {
  PlpInstance inst = load_instance(cfg);
  Rat delta;
  try {
    delta = parse_rat(*cfg.delta);
  } catch (const std::invalid_argument&) {
    throw InputError("malformed --delta '" + *cfg.delta + "'");
  }
  LpOutcome res = lp_feasible(inst.at(delta));
  const bool feasible = res.status != LpStatus::kInfeasible;
  out << (feasible ? "feasible" : "infeasible") << "\n";
  Json payload{{"schema_version", kSchemaVersion}, {"delta", format_rat(delta)},
               {"status", feasible ? "feasible" : "infeasible"}};
  Json cert = Json::array();
  for (const auto& v : feasible ? *res.witness : *res.farkas) cert.push_back(format_rat(v));
  payload[feasible ? "witness" : "farkas"] = std::move(cert);
  if (cfg.output_path) emit(cfg, payload, out);
  return kExitOk;
}

int do_find(const RunConfig& cfg, const SolveOptions& opts, std::ostream& out) {
  Preset p = preset_named(*cfg.preset);
  std::vector<int> ells = cfg.ell ? std::vector<int>{*cfg.ell} : std::vector<int>{2, 3};
  std::vector<Pattern> s0s;
  if (cfg.s0) s0s.push_back(*s0_for(cfg, p));
  PotentialSearch res = find_potential(p.kind, p.table, ells, s0s, opts);
  bool unknown = false;
  for (const auto& c : res.tried) {
    out << "ell=" << c.ell << (c.s0 ? " s0=" + c.s0->str() : std::string()) << ": "
        << to_string(c.verdict) << "\n";
    unknown = unknown || c.verdict == Verdict::kUnknownAtCap;
  }
  Json tried = Json::array();
  for (const auto& c : res.tried) {
    tried.push_back(Json{{"ell", c.ell},
                         {"s0", c.s0 ? Json(c.s0->str()) : Json(nullptr)},
                         {"verdict", to_string(c.verdict)}});
  }
  Json payload{{"schema_version", kSchemaVersion}, {"found", res.found}, {"tried", std::move(tried)}};
  if (res.found) {
    out << "found potential of length " << res.ell << "\n";
    payload["potential"] = potential_to_json(res.potential);
    payload["certificate"] = certificate_to_json(res.certificate);
  } else {
    out << "search exhausted without a potential\n";
  }
  emit(cfg, payload, out);
  return !res.found && unknown ? kExitUnknownAtCap : kExitOk;
}

int do_verify(const RunConfig& cfg, const SolveOptions& opts, std::ostream& out) {
  Preset p = preset_named(*cfg.preset);
  Potential w = potential_from_json(read_json_file(*cfg.potential_path));
  SideCertificate cert = verify_potential(p.kind, p.table, s0_for(cfg, p), w, opts);
  out << "potential " << (cert.verdict == Verdict::kFeasible ? "verified" : "not verified") << "; "
      << describe(cert) << "\n";
  emit(cfg, certificate_to_json(cert), out);
  return exit_for(cert.verdict);
}

int do_check(const RunConfig& cfg, std::ostream& out) {
  PlpInstance inst = load_instance(cfg);
  SideCertificate cert = certificate_from_json(read_json_file(*cfg.certificate_path));
  if (cert.solution.size() != inst.n()) {
    throw InputError("dimension mismatch: certificate has " + std::to_string(cert.solution.size()) +
                     " variables, instance has " + std::to_string(inst.n()));
  }
  CertificateCheck res = check_certificate(inst, cert);
  if (!res) throw InputError("certificate rejected: " + res.reason);
  out << "certificate accepted\n";
  return kExitOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto log = std::make_shared<spdlog::logger>("plp", sink);
  log->set_pattern("[%l] %v");
  log->set_level(spdlog::level::from_str(cfg.log_level));
  try {
    if (cfg.instance_path && cfg.preset) throw InputError("give only one of --instance and --preset");
    if (cfg.degree_cap && *cfg.degree_cap < 0) throw InputError("--degree-cap must be nonnegative");
    const SolveOptions opts = solve_options(cfg, log);
    switch (cfg.command) {
      case Command::kSolve: return do_solve(cfg, opts, out);
      case Command::kOptimize: return do_optimize(cfg, opts, out);
      case Command::kEvalPoint: return do_eval(cfg, out);
      case Command::kFindPotential: return do_find(cfg, opts, out);
      case Command::kVerifyPotential: return do_verify(cfg, opts, out);
      case Command::kCheckCertificate: return do_check(cfg, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err << "error: unexpected JSON shape: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: dimension mismatch: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace plp::cli
