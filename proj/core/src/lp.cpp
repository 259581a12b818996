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

#include "plp/lp.hpp"

#include <algorithm>

namespace plp {

namespace {

SparseTerms sparse(std::span<const Rat> dense) {
  SparseTerms out;
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (sgn(dense[j]) != 0) out.emplace_back(j, dense[j]);
  }
  return out;
}

LpOutcome from_solution(LpSolution&& sol) {
  LpOutcome out;
  out.status = sol.status;
  out.stats = sol.stats;
  if (sol.status != LpStatus::kInfeasible) out.witness = std::move(sol.x);
  if (sol.status == LpStatus::kOptimal) out.value = std::move(sol.value);
  if (sol.status == LpStatus::kUnbounded) out.ray = std::move(sol.ray);
  return out;
}

// Solves the alternative system: y^T A = 0, y^T b = 1 with sign rules per
// sense. Feasible exactly when prog is infeasible.
std::optional<std::vector<Rat>> farkas_multipliers(const LinProgram& prog) {
  const std::size_t m = prog.constraints.size();
  LpProblem alt;
  alt.num_vars = m;
  std::vector<SparseTerms> columns(prog.dim);
  SparseTerms rhs_row;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = prog.constraints[i];
    for (std::size_t j = 0; j < prog.dim; ++j) {
      if (sgn(con.coeffs[j]) != 0) columns[j].emplace_back(i, con.coeffs[j]);
    }
    if (sgn(con.rhs) != 0) rhs_row.emplace_back(i, con.rhs);
    if (con.sense == Sense::kGE) alt.rows.push_back({{{i, Rat(1)}}, Sense::kGE, Rat(0)});
    if (con.sense == Sense::kLE) alt.rows.push_back({{{i, Rat(1)}}, Sense::kLE, Rat(0)});
  }
  for (auto& col : columns) alt.rows.push_back({std::move(col), Sense::kEQ, Rat(0)});
  alt.rows.push_back({std::move(rhs_row), Sense::kEQ, Rat(1)});
  auto sol = solve_lp(alt);
  if (sol.status == LpStatus::kInfeasible) return std::nullopt;
  return std::move(sol.x);
}

}  // namespace

Rat LinConstraint::slack(std::span<const Rat> x) const {
  Rat s = -rhs;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) != 0) s += coeffs[j] * x[j];
  }
  return s;
}

bool LinConstraint::holds(std::span<const Rat> x) const {
  int s = sgn(slack(x));
  switch (sense) {
    case Sense::kGE: return s >= 0;
    case Sense::kLE: return s <= 0;
    case Sense::kEQ: return s == 0;
  }
  return false;
}

void LinProgram::validate() const {
  for (const auto& con : constraints) {
    if (con.coeffs.size() != dim) throw std::invalid_argument("constraint length differs from dim");
  }
}

LpProblem to_problem(const LinProgram& prog) {
  prog.validate();
  LpProblem lp;
  lp.num_vars = prog.dim;
  lp.rows.reserve(prog.constraints.size());
  for (const auto& con : prog.constraints) {
    lp.rows.push_back({sparse(con.coeffs), con.sense, con.rhs});
  }
  return lp;
}

LpOutcome lp_feasible(const LinProgram& prog) {
  LpOutcome out = from_solution(solve_lp(to_problem(prog)));
  if (out.status == LpStatus::kInfeasible) {
    out.farkas = farkas_multipliers(prog);
    if (!out.farkas) throw std::logic_error("infeasible program without Farkas certificate");
  }
  return out;
}

LpOutcome lp_optimize(const LinProgram& prog, std::span<const Rat> objective, Direction dir) {
  if (objective.size() != prog.dim) throw std::invalid_argument("objective length differs from dim");
  LpProblem lp = to_problem(prog);
  lp.objective = sparse(objective);
  if (dir == Direction::kMin) {
    for (auto& term : lp.objective) term.second = -term.second;
  }
  LpSolution sol = solve_lp(lp);
  if (dir == Direction::kMin) sol.value = -sol.value;
  return from_solution(std::move(sol));
}

bool check_farkas(const LinProgram& prog, std::span<const Rat> y) {
  if (y.size() != prog.constraints.size()) return false;
  std::vector<Rat> combo(prog.dim);
  Rat rhs;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto& con = prog.constraints[i];
    if (con.sense == Sense::kGE && sgn(y[i]) < 0) return false;
    if (con.sense == Sense::kLE && sgn(y[i]) > 0) return false;
    if (sgn(y[i]) == 0) continue;
    for (std::size_t j = 0; j < prog.dim; ++j) combo[j] += y[i] * con.coeffs[j];
    rhs += y[i] * con.rhs;
  }
  return std::all_of(combo.begin(), combo.end(), [](const Rat& v) { return sgn(v) == 0; }) &&
         sgn(rhs) > 0;
}

bool is_forced_zero(const LinProgram& prog, std::span<const Rat> functional, const Rat& offset) {
  for (Direction dir : {Direction::kMax, Direction::kMin}) {
    LpOutcome out = lp_optimize(prog, functional, dir);
    if (out.status == LpStatus::kInfeasible) {
      throw std::domain_error("forced-zero undefined on empty set");
    }
    if (out.status == LpStatus::kUnbounded || *out.value != offset) return false;
  }
  return true;
}

static void accumulate(LpStats* into, const LpStats& from) {
  if (into == nullptr) return;
  into->pivots += from.pivots;
  into->degenerate_pivots += from.degenerate_pivots;
  into->bland_pivots += from.bland_pivots;
  into->rows = std::max(into->rows, from.rows);
  into->cols = std::max(into->cols, from.cols);
}

std::optional<std::vector<bool>> forced_rows(const LpProblem& base,
                                             std::span<const std::size_t> ge_rows,
                                             LpStats* stats) {
  // Repeatedly maximize the sum of per-row slack bounds t_k in [0, 1]. A row
  // with t_k > 0 at the optimum is not forced; an optimum of 0 proves every
  // remaining row forced.
  std::vector<bool> forced(ge_rows.size(), true);
  std::vector<std::size_t> open(ge_rows.size());
  for (std::size_t k = 0; k < open.size(); ++k) open[k] = k;
  bool first = true;

  while (!open.empty() || first) {
    LpProblem lp = base;
    const std::size_t t0 = base.num_vars;
    lp.num_vars = t0 + open.size();
    for (std::size_t k = 0; k < open.size(); ++k) {
      auto& row = lp.rows[ge_rows[open[k]]];
      if (row.sense != Sense::kGE) throw std::invalid_argument("forced_rows expects GE rows");
      row.terms.emplace_back(t0 + k, Rat(-1));
      lp.rows.push_back({{{t0 + k, Rat(1)}}, Sense::kGE, Rat(0)});
      lp.rows.push_back({{{t0 + k, Rat(1)}}, Sense::kLE, Rat(1)});
      lp.objective.emplace_back(t0 + k, Rat(1));
    }
    LpSolution sol = solve_lp(lp);
    accumulate(stats, sol.stats);
    if (sol.status == LpStatus::kInfeasible) {
      if (first) return std::nullopt;
      throw std::logic_error("feasible program turned infeasible");
    }
    first = false;
    if (sgn(sol.value) == 0) break;
    std::vector<std::size_t> still;
    for (std::size_t k = 0; k < open.size(); ++k) {
      if (sgn(sol.x[t0 + k]) > 0) {
        forced[open[k]] = false;
      } else {
        still.push_back(open[k]);
      }
    }
    open = std::move(still);
  }
  return forced;
}

std::optional<std::vector<Rat>> strict_point(const LpProblem& base,
                                             std::span<const std::size_t> ge_rows,
                                             LpStats* stats) {
  LpProblem lp = base;
  const std::size_t t = base.num_vars;
  lp.num_vars = t + 1;
  for (std::size_t i : ge_rows) {
    if (lp.rows[i].sense != Sense::kGE) throw std::invalid_argument("strict_point expects GE rows");
    lp.rows[i].terms.emplace_back(t, Rat(-1));
  }
  lp.rows.push_back({{{t, Rat(1)}}, Sense::kLE, Rat(1)});
  lp.objective = {{t, Rat(1)}};

  LpSolution sol = solve_lp(lp);
  accumulate(stats, sol.stats);
  if (sol.status == LpStatus::kInfeasible) return std::nullopt;
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("bounded LP reported unbounded");
  // t is free, so t* < 0 means the rows cannot hold simultaneously.
  if (sgn(sol.value) < 0) return std::nullopt;
  if (sgn(sol.value) == 0) throw ForcedInequalityError();
  sol.x.resize(t);
  return std::move(sol.x);
}

std::vector<bool> forced_inequalities(const LinProgram& prog,
                                      std::span<const std::size_t> candidates) {
  auto forced = forced_rows(to_problem(prog), candidates);
  if (!forced) throw std::domain_error("forced-zero undefined on empty set");
  return *forced;
}

std::optional<std::vector<Rat>> relative_interior_point(
    std::span<const LinConstraint> equalities, std::span<const LinConstraint> inequalities) {
  LinProgram prog;
  if (!equalities.empty()) prog.dim = equalities.front().coeffs.size();
  if (!inequalities.empty()) prog.dim = inequalities.front().coeffs.size();
  for (const auto& con : equalities) {
    if (con.sense != Sense::kEQ) throw std::invalid_argument("equality list holds a non-EQ row");
    prog.constraints.push_back(con);
  }
  std::vector<std::size_t> strict;
  for (const auto& con : inequalities) {
    if (con.sense == Sense::kEQ) throw std::invalid_argument("inequality list holds an EQ row");
    LinConstraint oriented = con;
    if (con.sense == Sense::kLE) {
      for (auto& a : oriented.coeffs) a = -a;
      oriented.rhs = -oriented.rhs;
      oriented.sense = Sense::kGE;
    }
    strict.push_back(prog.constraints.size());
    prog.constraints.push_back(std::move(oriented));
  }
  return strict_point(to_problem(prog), strict);
}

}  // namespace plp
