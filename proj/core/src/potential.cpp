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

#include "plp/potential.hpp"

#include <stdexcept>

#include "plp/sturm.hpp"

namespace plp {

namespace {

const Poly kOne({1});

// 0/1 indicator of rows of length `len` that begin with `head`.
std::vector<Poly> indicator(const Pattern& head, int len) {
  std::vector<Poly> out(pattern_count(len));
  const std::size_t stride = pattern_count(len - head.length());
  const std::size_t first = head.index() * stride;
  for (std::size_t r = first; r < first + stride; ++r) out[r] = kOne;
  return out;
}

struct Layout {
  std::size_t N;       // vertex count = size of w
  std::size_t E;       // edge count
  std::size_t blocks;  // number of z blocks
  std::size_t z(std::size_t block) const { return N * (1 + block); }
};

// Writes rows P(w)_e - (Cw)_e - z_pre + z_suf >= rhs_e for one z block.
void add_cycle_block(PlpInstance& inst, std::size_t row0, const Layout& lay, std::size_t block,
                     const PolyMatrix* C, const std::vector<Poly>& rhs) {
  for (std::size_t e = 0; e < lay.E; ++e) {
    const std::size_t row = row0 + e;
    const std::size_t pre = e / 3;
    const std::size_t suf = e % lay.N;
    inst.A.at(row, pre) += kOne;
    if (C != nullptr) {
      for (std::size_t s = 0; s < lay.N; ++s) inst.A.at(row, s) -= C->at(e, s);
    }
    inst.A.at(row, lay.z(block) + pre) -= kOne;
    inst.A.at(row, lay.z(block) + suf) += kOne;
    inst.b[row] = rhs[e];
  }
}

SolveOptions with_default_cap(SolveOptions opts) {
  if (!opts.degree_cap) opts.degree_cap = kDefaultAutomataDegreeCap;
  return opts;
}

Layout layout(AutomatonKind kind, int ell) {
  return {pattern_count(ell), pattern_count(ell + 1), kind == AutomatonKind::kPca ? 1u : 2u};
}

}  // namespace

const char* to_string(AutomatonKind kind) {
  return kind == AutomatonKind::kPca ? "pca" : "broadcast";
}

Potential Potential::zero(int length) {
  if (length < 1) throw std::invalid_argument("potential length must be positive");
  return Potential{length, std::vector<Poly>(pattern_count(length)), kOne};
}

void Potential::validate() const {
  if (length < 1) throw std::invalid_argument("potential length must be positive");
  if (coeffs.size() != pattern_count(length)) {
    throw std::invalid_argument("potential needs 3^length coefficients");
  }
  if (!positive_near_zero(shared_den)) {
    throw std::domain_error("shared denominator is not positive near 0");
  }
}

std::vector<Rat> Potential::at(const Rat& delta) const {
  Rat den = shared_den(delta);
  std::vector<Rat> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c(delta) / den);
  return out;
}

Potential apply(const PolyMatrix& M, const Potential& w, int length) {
  if (M.cols() != w.coeffs.size() || M.rows() != pattern_count(length)) {
    throw std::invalid_argument("matrix does not fit the potential");
  }
  Potential out{length, std::vector<Poly>(M.rows()), w.shared_den};
  for (std::size_t r = 0; r < M.rows(); ++r) {
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (!M.at(r, c).is_zero() && !w.coeffs[c].is_zero()) out.coeffs[r] += M.at(r, c) * w.coeffs[c];
    }
  }
  return out;
}

Potential extend(const Potential& w, int length) {
  return apply(build_P(w.length, length), w, length);
}

RatFunc cycle_value(const Potential& w, std::string_view y) {
  if (y.empty()) throw std::invalid_argument("cyclic string must be nonempty");
  (void)Pattern{y};  // validates the alphabet
  Poly total;
  std::string window(static_cast<std::size_t>(w.length), '0');
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t k = 0; k < window.size(); ++k) window[k] = y[(i + k) % y.size()];
    total += w.coeffs[Pattern(window).index()];
  }
  return RatFunc(total, w.shared_den);
}

PlpInstance assemble_pca_plp(const TransitionTable& table, int ell, const Pattern& s0) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  if (s0.has_unknown()) throw std::invalid_argument("s0 must be a 0/1 pattern");
  if (s0.length() > ell) throw std::invalid_argument("s0 longer than ell");
  const Layout lay = layout(AutomatonKind::kPca, ell);
  PlpInstance inst{PolyMatrix(lay.E, 2 * lay.N), std::vector<Poly>(lay.E)};
  const PolyMatrix C = build_C(table, ell);
  add_cycle_block(inst, 0, lay, 0, &C, indicator(Pattern("?" + s0.str()), ell + 1));
  return inst;
}

PlpInstance assemble_broadcast_plp(const TransitionTable& table, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  const Layout lay = layout(AutomatonKind::kBroadcast, ell);
  std::vector<std::size_t> pinned;
  for (std::size_t s = 0; s < lay.N; ++s) {
    if (!Pattern::from_index(s, ell).has_unknown()) pinned.push_back(s);
  }
  const std::size_t m = 2 * lay.E + 2 * pinned.size();
  PlpInstance inst{PolyMatrix(m, 3 * lay.N), std::vector<Poly>(m)};
  const PolyMatrix C = build_C(table, ell);
  add_cycle_block(inst, 0, lay, 0, &C, std::vector<Poly>(lay.E));
  // P(w) - P({?}) >= z'_pre - z'_suf, i.e. the row reads P(w) - ... >= P({?}).
  add_cycle_block(inst, lay.E, lay, 1, nullptr, indicator(Pattern("?"), ell + 1));
  std::size_t row = 2 * lay.E;
  for (std::size_t s : pinned) {
    inst.A.at(row++, s) = kOne;
    inst.A.at(row++, s) = -kOne;
  }
  return inst;
}

PlpInstance assemble(AutomatonKind kind, const TransitionTable& table, int ell,
                     const std::optional<Pattern>& s0) {
  if (kind == AutomatonKind::kBroadcast) return assemble_broadcast_plp(table, ell);
  if (!s0) throw std::invalid_argument("a PCA instance needs s0");
  return assemble_pca_plp(table, ell, *s0);
}

PlpInstance reduce_with_potential(AutomatonKind kind, const TransitionTable& table,
                                  const std::optional<Pattern>& s0, const Potential& w) {
  w.validate();
  const PlpInstance full = assemble(kind, table, w.length, s0);
  const std::size_t N = w.coeffs.size();
  PlpInstance out{PolyMatrix(full.m(), full.n() - N), std::vector<Poly>(full.m())};
  for (std::size_t i = 0; i < full.m(); ++i) {
    Poly rhs = full.b[i] * w.shared_den;
    for (std::size_t s = 0; s < N; ++s) {
      if (!full.A.at(i, s).is_zero() && !w.coeffs[s].is_zero()) rhs -= full.A.at(i, s) * w.coeffs[s];
    }
    out.b[i] = std::move(rhs);
    for (std::size_t j = N; j < full.n(); ++j) out.A.at(i, j - N) = full.A.at(i, j);
  }
  return out;
}

std::vector<std::vector<RatFunc>> potential_edge_weights(AutomatonKind kind,
                                                         const TransitionTable& table,
                                                         const std::optional<Pattern>& s0,
                                                         const Potential& w) {
  // Row e of the reduced system reads -z_pre + z_suf >= b_e, so the weight of
  // edge e is -b_e over the shared denominator.
  const PlpInstance red = reduce_with_potential(kind, table, s0, w);
  const std::size_t E = pattern_count(w.length + 1);
  const std::size_t blocks = kind == AutomatonKind::kPca ? 1 : 2;
  std::vector<std::vector<RatFunc>> out(blocks);
  for (std::size_t k = 0; k < blocks; ++k) {
    for (std::size_t e = 0; e < E; ++e) out[k].emplace_back(-red.b[k * E + e], w.shared_den);
  }
  return out;
}

SideCertificate verify_potential(AutomatonKind kind, const TransitionTable& table,
                                 const std::optional<Pattern>& s0, const Potential& w,
                                 const SolveOptions& opts) {
  return solve_side(reduce_with_potential(kind, table, s0, w), Side::kPositive,
                    with_default_cap(opts));
}

Potential decode_potential(std::span<const RatFunc> solution, int ell) {
  const std::size_t N = pattern_count(ell);
  if (solution.size() < N) throw std::invalid_argument("solution shorter than the w block");
  Poly Q = kOne;
  for (std::size_t s = 0; s < N; ++s) Q = lcm(Q, solution[s].den());
  Q = Q * (1 / Q.lowest());
  Potential out{ell, std::vector<Poly>(N), Q};
  for (std::size_t s = 0; s < N; ++s) {
    out.coeffs[s] = solution[s].num() * divmod(Q, solution[s].den()).quotient;
  }
  return out;
}

std::vector<Pattern> default_s0_candidates(int ell) {
  std::vector<Pattern> out;
  for (int len = 1; len <= ell; ++len) {
    for (std::size_t i = 0; i < pattern_count(len); ++i) {
      Pattern p = Pattern::from_index(i, len);
      if (!p.has_unknown()) out.push_back(std::move(p));
    }
  }
  return out;
}

PotentialSearch find_potential(AutomatonKind kind, const TransitionTable& table,
                               std::span<const int> ells, std::span<const Pattern> s0s,
                               const SolveOptions& opts) {
  if (ells.empty()) throw std::invalid_argument("empty search space");
  const SolveOptions capped = with_default_cap(opts);
  PotentialSearch out;
  for (int ell : ells) {
    std::vector<std::optional<Pattern>> starts;
    if (kind == AutomatonKind::kBroadcast) {
      starts.emplace_back(std::nullopt);
    } else if (s0s.empty()) {
      for (auto& p : default_s0_candidates(ell)) starts.emplace_back(std::move(p));
    } else {
      for (const auto& p : s0s) {
        if (p.length() <= ell) starts.emplace_back(p);
      }
    }
    for (const auto& s0 : starts) {
      PlpInstance inst = assemble(kind, table, ell, s0);
      SideCertificate cert = solve_side(inst, Side::kPositive, capped);
      out.tried.push_back({ell, s0, cert.verdict});
      if (cert.verdict != Verdict::kFeasible) continue;
      out.found = true;
      out.ell = ell;
      out.s0 = s0;
      out.potential = decode_potential(cert.solution, ell);
      out.instance = std::move(inst);
      out.certificate = std::move(cert);
      return out;
    }
  }
  return out;
}

}  // namespace plp
