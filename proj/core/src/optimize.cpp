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

#include "plp/optimize.hpp"

#include <stdexcept>

namespace plp {

namespace {

const Poly kOne({1});

void add_nonneg_rows(PlpInstance& inst, std::size_t row0, std::size_t col0, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) inst.A.at(row0 + j, col0 + j) = kOne;
}

}  // namespace

const char* to_string(OptStatus status) {
  switch (status) {
    case OptStatus::kLocallyInfeasible: return "locally-infeasible";
    case OptStatus::kLocallyUnbounded: return "locally-unbounded";
    case OptStatus::kLocallyOptimal: return "locally-optimal";
    case OptStatus::kUnknownAtCap: return "unknown-at-cap";
  }
  return "?";
}

void ParamLp::validate() const {
  if (b.size() != A.rows()) throw std::invalid_argument("b length differs from the rows of A");
  if (c.size() != A.cols()) throw std::invalid_argument("c length differs from the columns of A");
}

PlpInstance ParamLp::primal() const {
  validate();
  const std::size_t m = A.rows(), n = A.cols();
  PlpInstance inst{PolyMatrix(m + n, n), std::vector<Poly>(m + n)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) inst.A.at(i, j) = -A.at(i, j);
    inst.b[i] = -b[i];
  }
  add_nonneg_rows(inst, m, 0, n);
  return inst;
}

PlpInstance ParamLp::dual() const {
  validate();
  const std::size_t m = A.rows(), n = A.cols();
  PlpInstance inst{PolyMatrix(n + m, m), std::vector<Poly>(n + m)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) inst.A.at(j, i) = A.at(i, j);
    inst.b[j] = c[j];
  }
  add_nonneg_rows(inst, n, 0, m);
  return inst;
}

PlpInstance ParamLp::combined() const {
  validate();
  const std::size_t m = A.rows(), n = A.cols();
  const std::size_t rows = (m + n) + (n + m) + 1;
  PlpInstance inst{PolyMatrix(rows, n + m), std::vector<Poly>(rows)};
  const PlpInstance p = primal();
  const PlpInstance d = dual();
  for (std::size_t i = 0; i < p.m(); ++i) {
    for (std::size_t j = 0; j < n; ++j) inst.A.at(i, j) = p.A.at(i, j);
    inst.b[i] = p.b[i];
  }
  for (std::size_t i = 0; i < d.m(); ++i) {
    for (std::size_t j = 0; j < m; ++j) inst.A.at(p.m() + i, n + j) = d.A.at(i, j);
    inst.b[p.m() + i] = d.b[i];
  }
  const std::size_t last = rows - 1;
  for (std::size_t j = 0; j < n; ++j) inst.A.at(last, j) = c[j];
  for (std::size_t i = 0; i < m; ++i) inst.A.at(last, n + i) = -b[i];
  return inst;
}

LinProgram ParamLp::at(const Rat& delta) const {
  validate();
  LinProgram prog;
  prog.dim = A.cols();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    LinConstraint con{std::vector<Rat>(prog.dim), b[i](delta), Sense::kLE};
    for (std::size_t j = 0; j < prog.dim; ++j) con.coeffs[j] = A.at(i, j)(delta);
    prog.constraints.push_back(std::move(con));
  }
  for (std::size_t j = 0; j < prog.dim; ++j) {
    LinConstraint con{std::vector<Rat>(prog.dim), Rat(0), Sense::kGE};
    con.coeffs[j] = 1;
    prog.constraints.push_back(std::move(con));
  }
  return prog;
}

std::vector<Rat> ParamLp::objective_at(const Rat& delta) const {
  std::vector<Rat> out;
  for (const auto& cj : c) out.push_back(cj(delta));
  return out;
}

OptOutcome solve_local_opt(const ParamLp& lp, const SolveOptions& opts) {
  OptOutcome out;
  out.stages.reserve(3);
  auto stage = [&](const PlpInstance& inst) -> const SideCertificate& {
    out.stages.push_back(solve_side(inst, Side::kPositive, opts));
    return out.stages.back();
  };

  const SideCertificate& primal = stage(lp.primal());
  if (primal.verdict == Verdict::kUnknownAtCap) return out;
  if (primal.verdict == Verdict::kInfeasible) {
    out.status = OptStatus::kLocallyInfeasible;
    return out;
  }
  const SideCertificate& dual = stage(lp.dual());
  if (dual.verdict == Verdict::kUnknownAtCap) return out;
  if (dual.verdict == Verdict::kInfeasible) {
    out.status = OptStatus::kLocallyUnbounded;
    return out;
  }
  const SideCertificate& both = stage(lp.combined());
  if (both.verdict == Verdict::kUnknownAtCap) return out;
  if (both.verdict == Verdict::kInfeasible) {
    throw std::logic_error("primal and dual feasible but no optimal pair");
  }
  const std::size_t n = lp.A.cols();
  out.status = OptStatus::kLocallyOptimal;
  out.x.emplace(both.solution.begin(), both.solution.begin() + static_cast<std::ptrdiff_t>(n));
  out.y.emplace(both.solution.begin() + static_cast<std::ptrdiff_t>(n), both.solution.end());
  RatFunc value;
  for (std::size_t j = 0; j < n; ++j) value = value + (*out.x)[j] * lp.c[j];
  out.value = value;
  out.radius = both.radius;
  return out;
}

}  // namespace plp
