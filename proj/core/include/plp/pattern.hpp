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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plp/instance.hpp"

namespace plp {

/// Symbol values double as base-3 digits.
enum class Symbol : unsigned char { kZero = 0, kOne = 1, kUnknown = 2 };

char to_char(Symbol s);

/// Nonempty string over {0, 1, ?}. Its index is the base-3 value with the
/// leftmost symbol most significant.
class Pattern {
 public:
  /// Throws std::invalid_argument on an empty string or a foreign symbol.
  explicit Pattern(std::string_view text);
  static Pattern from_index(std::size_t index, int length);

  int length() const { return static_cast<int>(text_.size()); }
  std::size_t index() const;
  const std::string& str() const { return text_; }
  Symbol at(int i) const;

  /// First length()-1 symbols (the source vertex of an edge).
  Pattern prefix() const;
  /// Last length()-1 symbols (the target vertex of an edge).
  Pattern suffix() const;
  bool starts_with(const Pattern& head) const;
  bool has_unknown() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::string text_;
};

/// 3^len.
std::size_t pattern_count(int len);

/// Every pattern of the given length in index order.
std::vector<Pattern> all_patterns(int len);

/// Patterns of length ell as vertices, patterns of length ell+1 as edges from
/// prefix to suffix.
struct PatternGraph {
  int level = 1;

  std::size_t vertex_count() const { return pattern_count(level); }
  std::size_t edge_count() const { return pattern_count(level + 1); }
  std::size_t source(std::size_t edge) const { return edge / 3; }
  std::size_t target(std::size_t edge) const { return edge % vertex_count(); }
};

/// 3^to x 3^from 0/1 matrix: column s is set in every row that begins with s.
PolyMatrix build_P(int ell_from, int ell_to);

struct CycleMatrices {
  PolyMatrix A;         // row e reads z_prefix(e) - z_suffix(e)
  PolyMatrix selector;  // identity on the edge space
};
CycleMatrices build_cycle_matrices(int ell);

/// True iff no cycle of PatternGraph(ell) has negative total weight
/// (Bellman-Ford from a virtual source).
bool negative_cycle_check(std::span<const Rat> weights, int ell);

}  // namespace plp
