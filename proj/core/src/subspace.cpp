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

#include "plp/subspace.hpp"

#include <stdexcept>

#include "plp/lp.hpp"

namespace plp {

namespace {

constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);

LpProblem::Row as_row(const LinearForm& f, Sense sense) {
  return {f.terms, sense, Rat(-f.constant)};
}

void count(EliminationStats* stats, const LpStats& lp) {
  if (stats == nullptr) return;
  ++stats->lp_calls;
  stats->lp.pivots += lp.pivots;
  stats->lp.degenerate_pivots += lp.degenerate_pivots;
  stats->lp.bland_pivots += lp.bland_pivots;
}

// Whether f vanishes on all of the (nonempty) set lp.
bool forced_zero(const LpProblem& lp, const LinearForm& f, EliminationStats* stats) {
  if (f.is_constant()) return sgn(f.constant) == 0;
  for (int dir : {1, -1}) {
    LpProblem probe = lp;
    for (const auto& [j, a] : f.terms) probe.objective.emplace_back(j, dir * a);
    LpSolution sol = solve_lp(probe);
    count(stats, sol.stats);
    if (sol.status == LpStatus::kInfeasible) throw std::logic_error("elimination set became empty");
    if (sol.status == LpStatus::kUnbounded) return false;
    if (dir * sol.value != -f.constant) return false;
  }
  return true;
}

bool feasible(const LpProblem& lp, EliminationStats* stats) {
  LpSolution sol = solve_lp(lp);
  count(stats, sol.stats);
  return sol.status != LpStatus::kInfeasible;
}

}  // namespace

bool HalfAffineSubspace::is_nonempty(std::size_t ambient_dim) const {
  // Nonempty iff the minimum of the strict form over the equality set is < 0.
  LpProblem lp;
  lp.num_vars = ambient_dim;
  for (const auto& e : equalities) lp.rows.push_back(as_row(e, Sense::kEQ));
  for (const auto& [j, a] : strict.terms) lp.objective.emplace_back(j, -a);
  LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::kInfeasible) return false;
  return sol.status == LpStatus::kUnbounded || strict.constant - sol.value < 0;
}

bool subspace_elimination_generic(std::span<const HalfAffineSubspace> spaces,
                                  std::size_t ambient_dim, EliminationStats* stats) {
  LpProblem P;
  P.num_vars = ambient_dim;
  std::vector<bool> removed(spaces.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    if (stats != nullptr) ++stats->rounds;
    for (std::size_t k = 0; k < spaces.size(); ++k) {
      if (removed[k]) continue;
      bool inside = true;
      for (const auto& e : spaces[k].equalities) {
        if (!forced_zero(P, e, stats)) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      // P lies in aff(B): what survives of P is where the strict form is >= 0.
      P.rows.push_back(as_row(spaces[k].strict, Sense::kGE));
      removed[k] = true;
      changed = true;
      if (stats != nullptr) ++stats->promotions;
      if (!feasible(P, stats)) return false;
    }
  }
  return true;
}

std::optional<std::vector<Rat>> subspace_elimination_plp(std::span<const CoeffChain> chains,
                                                         const CoeffSpace& space,
                                                         EliminationStats* stats) {
  struct Frontier {
    std::size_t chain;
    std::size_t k = 0;
    std::size_t row = kNoRow;
    bool settled = false;
  };

  LpProblem P;
  P.num_vars = space.total_dim();
  std::vector<Frontier> fronts;

  // Installs forms[k] as the chain's frontier; false when P becomes
  // trivially empty.
  auto install = [&](Frontier& fr) -> bool {
    const auto& forms = chains[fr.chain].forms;
    while (fr.k < forms.size()) {
      const LinearForm& f = forms[fr.k];
      if (!f.is_constant()) {
        fr.row = P.rows.size();
        P.rows.push_back(as_row(f, Sense::kGE));
        return true;
      }
      if (sgn(f.constant) < 0) return false;
      if (sgn(f.constant) > 0) break;
      ++fr.k;  // identically zero coefficient
    }
    fr.settled = true;
    fr.row = kNoRow;
    return true;
  };

  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (chains[i].identically_zero()) continue;
    fronts.push_back({i});
    if (!install(fronts.back())) return std::nullopt;
  }

  while (true) {
    if (stats != nullptr) ++stats->rounds;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> owners;
    for (std::size_t f = 0; f < fronts.size(); ++f) {
      if (fronts[f].settled) continue;
      rows.push_back(fronts[f].row);
      owners.push_back(f);
    }
    LpStats lp_stats;
    auto forced = forced_rows(P, rows, &lp_stats);
    if (stats != nullptr) {
      stats->lp_calls += 1;
      stats->lp.pivots += lp_stats.pivots;
      stats->lp.degenerate_pivots += lp_stats.degenerate_pivots;
      stats->lp.bland_pivots += lp_stats.bland_pivots;
    }
    if (!forced) return std::nullopt;

    bool promoted = false;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (!(*forced)[t]) continue;
      promoted = true;
      if (stats != nullptr) ++stats->promotions;
      Frontier& fr = fronts[owners[t]];
      P.rows[fr.row].sense = Sense::kEQ;
      ++fr.k;
      if (!install(fr)) return std::nullopt;
    }
    if (!promoted) break;
  }

  std::vector<std::size_t> strict;
  for (const auto& fr : fronts) {
    if (!fr.settled) strict.push_back(fr.row);
  }
  LpStats lp_stats;
  auto point = strict_point(P, strict, &lp_stats);
  if (stats != nullptr) {
    stats->lp_calls += 1;
    stats->lp.pivots += lp_stats.pivots;
  }
  if (!point) throw std::logic_error("fixed point of elimination lost feasibility");
  return point;
}

std::vector<HalfAffineSubspace> chain_subspaces(std::span<const CoeffChain> chains) {
  std::vector<HalfAffineSubspace> out;
  for (const auto& chain : chains) {
    for (std::size_t j = 0; j < chain.forms.size(); ++j) {
      HalfAffineSubspace b;
      b.equalities.assign(chain.forms.begin(), chain.forms.begin() + static_cast<std::ptrdiff_t>(j));
      b.strict = chain.forms[j];
      out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace plp
