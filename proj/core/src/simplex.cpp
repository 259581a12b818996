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

#include "plp/simplex.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>

namespace plp {

namespace {

constexpr std::size_t kNone = SIZE_MAX;

struct FreeRow {
  std::size_t var;
  SparseTerms terms;  // over variable ids
  Rat constant;
};

enum class PhaseResult { kOptimal, kUnbounded };

// Dictionary form: basic[r] = rows[r][C] + sum_c rows[r][c] * nonbasic[c].
// Column C holds the constant. Originals are 0..n-1, slacks n..n+m-1 and the
// phase-one artificial is n+m.
class Dictionary {
 public:
  explicit Dictionary(const LpProblem& lp)
      : n_(lp.num_vars), m_(lp.rows.size()), ncols_(n_ + 1), kconst_(n_ + 1) {
    const std::size_t nvars = n_ + m_ + 1;
    is_free_.assign(nvars, false);
    for (std::size_t j = 0; j < n_; ++j) is_free_[j] = true;
    artificial_ = n_ + m_;

    nonbasic_.resize(ncols_);
    for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = j;
    nonbasic_[n_] = artificial_;
    col_alive_.assign(ncols_, true);
    col_alive_[n_] = false;

    rows_.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& src = lp.rows[i];
      std::vector<Rat> row(ncols_ + 1);
      bool flip = src.sense == Sense::kLE;
      for (const auto& [j, a] : src.terms) {
        if (j >= n_) throw std::out_of_range("LP term references unknown variable");
        row[j] += flip ? Rat(-a) : a;
      }
      row[kconst_] = flip ? src.rhs : Rat(-src.rhs);
      rows_.push_back(std::move(row));
      basic_.push_back(n_ + i);
      is_eq_.push_back(src.sense == Sense::kEQ);
    }
    row_alive_.assign(m_, true);

    obj_.assign(ncols_ + 1, Rat(0));
    for (const auto& [j, a] : lp.objective) {
      if (j >= n_) throw std::out_of_range("objective references unknown variable");
      obj_[j] += a;
    }
    stats_.rows = m_;
    stats_.cols = n_;
  }

  LpSolution solve() {
    LpSolution out;
    if (!eliminate_equalities() || !eliminate_free_columns()) return finish_infeasible();
    if (!phase_one()) return finish_infeasible();

    if (free_ray_col_ != kNone) {
      out.status = LpStatus::kUnbounded;
      out.ray = free_ray();
    } else {
      auto res = run_simplex(obj_);
      if (res == PhaseResult::kUnbounded) {
        out.status = LpStatus::kUnbounded;
        out.ray = column_ray(unbounded_col_);
      } else {
        out.status = LpStatus::kOptimal;
      }
    }
    out.x = primal_point();
    out.stats = stats_;
    return out;
  }

 private:
  LpSolution finish_infeasible() {
    LpSolution out;
    out.status = LpStatus::kInfeasible;
    out.stats = stats_;
    return out;
  }

  void pivot(std::size_t r, std::size_t c, std::vector<Rat>* extra = nullptr) {
    auto& pr = rows_[r];
    const Rat inv = 1 / pr[c];
    nz_.clear();
    for (std::size_t j = 0; j <= kconst_; ++j) {
      if (j == c) continue;
      if (j < ncols_ && !col_alive_[j]) {
        pr[j] = 0;
        continue;
      }
      if (sgn(pr[j]) == 0) continue;
      pr[j] *= -inv;
      nz_.push_back(j);
    }
    pr[c] = inv;
    nz_.push_back(c);

    auto update = [&](std::vector<Rat>& row) {
      if (sgn(row[c]) == 0) return;
      const Rat e = row[c];
      row[c] = 0;
      for (std::size_t j : nz_) row[j] += e * pr[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r && row_alive_[i]) update(rows_[i]);
    }
    update(obj_);
    if (extra != nullptr) update(*extra);
    std::swap(basic_[r], nonbasic_[c]);
    ++stats_.pivots;
  }

  std::size_t row_nonzeros(std::size_t r) const {
    std::size_t count = 0;
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (col_alive_[j] && sgn(rows_[r][j]) != 0) ++count;
    }
    return count;
  }

  // Moves row r, whose basic variable is free, out of the tableau.
  void retire_free_row(std::size_t r) {
    FreeRow fr{basic_[r], {}, rows_[r][kconst_]};
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (col_alive_[j] && sgn(rows_[r][j]) != 0) fr.terms.emplace_back(nonbasic_[j], rows_[r][j]);
    }
    free_rows_.push_back(std::move(fr));
    row_alive_[r] = false;
  }

  bool eliminate_equalities() {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!is_eq_[r]) continue;
      std::size_t col = kNone;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (col_alive_[j] && is_free_[nonbasic_[j]] && sgn(rows_[r][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == kNone) {
        // Only free columns are alive at this stage, so the row is constant.
        if (sgn(rows_[r][kconst_]) != 0) return false;
        row_alive_[r] = false;
        continue;
      }
      pivot(r, col);
      retire_free_row(r);
      col_alive_[col] = false;  // now holds the equality slack, fixed at 0
    }
    return true;
  }

  bool eliminate_free_columns() {
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (!col_alive_[c] || !is_free_[nonbasic_[c]]) continue;
      std::size_t best = kNone;
      std::size_t best_nz = 0;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!row_alive_[r] || sgn(rows_[r][c]) == 0) continue;
        std::size_t nz = row_nonzeros(r);
        if (best == kNone || nz < best_nz) {
          best = r;
          best_nz = nz;
        }
      }
      if (best == kNone) {
        // Absent from every remaining row: fix at 0, remember a free ray.
        if (sgn(obj_[c]) != 0 && free_ray_col_ == kNone) {
          free_ray_col_ = c;
          free_ray_sign_ = sgn(obj_[c]);
        }
        col_alive_[c] = false;
        continue;
      }
      pivot(best, c);
      retire_free_row(best);
    }
    return true;
  }

  bool phase_one() {
    std::size_t worst = kNone;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!row_alive_[r] || sgn(rows_[r][kconst_]) >= 0) continue;
      if (worst == kNone || rows_[r][kconst_] < rows_[worst][kconst_]) worst = r;
    }
    if (worst == kNone) return true;

    const std::size_t acol = n_;
    col_alive_[acol] = true;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (row_alive_[r]) rows_[r][acol] = 1;
    }
    std::vector<Rat> aux(ncols_ + 1);
    aux[acol] = -1;
    pivot(worst, acol, &aux);
    run_simplex(aux);
    if (sgn(aux[kconst_]) < 0) return false;

    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!row_alive_[r] || basic_[r] != artificial_) continue;
      std::size_t col = kNone;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (col_alive_[j] && sgn(rows_[r][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == kNone) {
        row_alive_[r] = false;
      } else {
        pivot(r, col);
      }
    }
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (nonbasic_[j] == artificial_) col_alive_[j] = false;
    }
    return true;
  }

  PhaseResult run_simplex(std::vector<Rat>& obj) {
    bool bland = false;
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (!col_alive_[j] || sgn(obj[j]) <= 0) continue;
        if (enter == kNone) {
          enter = j;
        } else if (bland) {
          if (nonbasic_[j] < nonbasic_[enter]) enter = j;
        } else if (obj[j] > obj[enter] ||
                   (obj[j] == obj[enter] && nonbasic_[j] < nonbasic_[enter])) {
          enter = j;
        }
      }
      if (enter == kNone) return PhaseResult::kOptimal;

      std::size_t leave = kNone;
      Rat best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!row_alive_[r] || sgn(rows_[r][enter]) >= 0) continue;
        Rat ratio = rows_[r][kconst_] / -rows_[r][enter];
        if (leave == kNone || ratio < best || (ratio == best && basic_[r] < basic_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) {
        unbounded_col_ = enter;
        return PhaseResult::kUnbounded;
      }
      const bool degenerate = sgn(best) == 0;
      if (degenerate) ++stats_.degenerate_pivots;
      if (bland) ++stats_.bland_pivots;
      pivot(leave, enter, &obj == &obj_ ? nullptr : &obj);
      bland = degenerate;
    }
  }

  std::vector<Rat> back_substitute(std::vector<Rat> vals, bool homogeneous) const {
    for (auto it = free_rows_.rbegin(); it != free_rows_.rend(); ++it) {
      Rat v = homogeneous ? Rat(0) : it->constant;
      for (const auto& [id, a] : it->terms) v += a * vals[id];
      vals[it->var] = std::move(v);
    }
    vals.resize(n_);
    return vals;
  }

  std::vector<Rat> primal_point() const {
    std::vector<Rat> vals(n_ + m_ + 1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (row_alive_[r]) vals[basic_[r]] = rows_[r][kconst_];
    }
    return back_substitute(std::move(vals), false);
  }

  std::vector<Rat> column_ray(std::size_t c) const {
    std::vector<Rat> dirs(n_ + m_ + 1);
    dirs[nonbasic_[c]] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (row_alive_[r]) dirs[basic_[r]] = rows_[r][c];
    }
    return back_substitute(std::move(dirs), true);
  }

  std::vector<Rat> free_ray() const {
    std::vector<Rat> dirs(n_ + m_ + 1);
    dirs[nonbasic_[free_ray_col_]] = free_ray_sign_;
    return back_substitute(std::move(dirs), true);
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t ncols_;
  std::size_t kconst_;
  std::size_t artificial_ = 0;
  std::vector<std::vector<Rat>> rows_;
  std::vector<bool> row_alive_;
  std::vector<bool> is_eq_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::vector<bool> col_alive_;
  std::vector<bool> is_free_;
  std::vector<Rat> obj_;
  std::vector<FreeRow> free_rows_;
  std::vector<std::size_t> nz_;
  std::size_t free_ray_col_ = kNone;
  int free_ray_sign_ = 0;
  std::size_t unbounded_col_ = kNone;
  LpStats stats_;
};

bool row_holds(const LpProblem::Row& row, std::span<const Rat> x) {
  Rat lhs;
  for (const auto& [j, a] : row.terms) lhs += a * x[j];
  switch (row.sense) {
    case Sense::kGE: return lhs >= row.rhs;
    case Sense::kLE: return lhs <= row.rhs;
    case Sense::kEQ: return lhs == row.rhs;
  }
  return false;
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  Dictionary dict(problem);
  LpSolution out = dict.solve();
  if (out.status == LpStatus::kInfeasible) return out;
  for (const auto& row : problem.rows) {
    if (!row_holds(row, out.x)) throw std::logic_error("simplex produced an infeasible point");
  }
  for (const auto& [j, a] : problem.objective) out.value += a * out.x[j];
  return out;
}

}  // namespace plp
