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

#include <array>
#include <string>
#include <string_view>

#include "plp/instance.hpp"
#include "plp/pattern.hpp"

namespace plp {

/// Two-input noisy rule: entry(ab, c) is the probability of output c when the
/// left input is a and the right input is b. Entries are polynomials in the
/// noise parameter.
class TransitionTable {
 public:
  TransitionTable() = default;
  TransitionTable(std::string name, std::array<std::array<Poly, 3>, 9> entries);

  const std::string& name() const { return name_; }
  /// Row index is the length-2 pattern index, column the output symbol.
  const Poly& entry(std::size_t row, Symbol out) const {
    return entries_[row][static_cast<std::size_t>(out)];
  }
  const Poly& entry(std::string_view row, char out) const;

  /// Throws std::invalid_argument unless every row sums to 1 and every entry
  /// is nonnegative at sample points of (0, 1/2).
  void validate() const;

  static TransitionTable vertex_nand();
  static TransitionTable edge_nand();
  static TransitionTable imp();

 private:
  std::string name_;
  std::array<std::array<Poly, 3>, 9> entries_;
};

/// C_ell: row e (length ell+1), column s' (length ell) is the product of
/// entry((e_i, e_{i+1}), s'_i) over the ell sliding windows.
PolyMatrix build_C(const TransitionTable& table, int ell);

}  // namespace plp
