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

#include "plp/pattern.hpp"

#include <stdexcept>

namespace plp {

char to_char(Symbol s) {
  switch (s) {
    case Symbol::kZero: return '0';
    case Symbol::kOne: return '1';
    case Symbol::kUnknown: return '?';
  }
  return '!';
}

Pattern::Pattern(std::string_view text) : text_(text) {
  if (text_.empty()) throw std::invalid_argument("pattern must be nonempty");
  for (char ch : text_) {
    if (ch != '0' && ch != '1' && ch != '?') {
      throw std::invalid_argument("pattern symbol must be 0, 1 or ?");
    }
  }
}

Pattern Pattern::from_index(std::size_t index, int length) {
  if (length < 1) throw std::invalid_argument("pattern length must be positive");
  if (index >= pattern_count(length)) throw std::out_of_range("pattern index out of range");
  std::string s(static_cast<std::size_t>(length), '0');
  for (int i = length - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = to_char(static_cast<Symbol>(index % 3));
    index /= 3;
  }
  return Pattern(s);
}

std::size_t Pattern::index() const {
  std::size_t idx = 0;
  for (int i = 0; i < length(); ++i) idx = idx * 3 + static_cast<std::size_t>(at(i));
  return idx;
}

Symbol Pattern::at(int i) const {
  switch (text_[static_cast<std::size_t>(i)]) {
    case '0': return Symbol::kZero;
    case '1': return Symbol::kOne;
    default: return Symbol::kUnknown;
  }
}

Pattern Pattern::prefix() const { return Pattern(std::string_view(text_).substr(0, text_.size() - 1)); }

Pattern Pattern::suffix() const { return Pattern(std::string_view(text_).substr(1)); }

bool Pattern::starts_with(const Pattern& head) const {
  return std::string_view(text_).starts_with(head.text_);
}

bool Pattern::has_unknown() const { return text_.find('?') != std::string::npos; }

std::size_t pattern_count(int len) {
  std::size_t n = 1;
  for (int i = 0; i < len; ++i) n *= 3;
  return n;
}

std::vector<Pattern> all_patterns(int len) {
  std::vector<Pattern> out;
  const std::size_t n = pattern_count(len);
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(Pattern::from_index(i, len));
  return out;
}

PolyMatrix build_P(int ell_from, int ell_to) {
  if (ell_from < 1 || ell_to < ell_from) throw std::invalid_argument("build_P needs 1 <= from <= to");
  const std::size_t rows = pattern_count(ell_to);
  const std::size_t stride = pattern_count(ell_to - ell_from);
  PolyMatrix P(rows, pattern_count(ell_from));
  for (std::size_t r = 0; r < rows; ++r) P.at(r, r / stride) = Poly({1});
  return P;
}

CycleMatrices build_cycle_matrices(int ell) {
  if (ell < 1) throw std::invalid_argument("cycle matrices need ell >= 1");
  PatternGraph g{ell};
  CycleMatrices out{PolyMatrix(g.edge_count(), g.vertex_count()),
                    PolyMatrix(g.edge_count(), g.edge_count())};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    out.A.at(e, g.source(e)) += Poly({1});
    out.A.at(e, g.target(e)) -= Poly({1});
    out.selector.at(e, e) = Poly({1});
  }
  return out;
}

bool negative_cycle_check(std::span<const Rat> weights, int ell) {
  PatternGraph g{ell};
  if (weights.size() != g.edge_count()) throw std::invalid_argument("weights must be edge-indexed");
  // All distances start at 0, as if from a virtual source joined to every
  // vertex; a relaxation in round |V| exposes a negative cycle.
  std::vector<Rat> dist(g.vertex_count());
  for (std::size_t round = 0; round <= g.vertex_count(); ++round) {
    bool relaxed = false;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      Rat cand = dist[g.source(e)] + weights[e];
      if (cand < dist[g.target(e)]) {
        dist[g.target(e)] = std::move(cand);
        relaxed = true;
      }
    }
    if (!relaxed) return true;
  }
  return false;
}

}  // namespace plp
