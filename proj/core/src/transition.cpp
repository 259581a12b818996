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

#include "plp/transition.hpp"

#include <stdexcept>

namespace plp {

namespace {

using Row = std::array<Poly, 3>;

Poly lin(int c0, int c1) { return Poly({Rat(c0), Rat(c1)}); }
Poly quad(int c0, int c1, int c2) { return Poly({Rat(c0), Rat(c1), Rat(c2)}); }

// Rows in pattern order 00 01 0? 10 11 1? ?0 ?1 ??.
TransitionTable make(std::string name, std::array<Row, 9> rows) {
  TransitionTable t(std::move(name), std::move(rows));
  t.validate();
  return t;
}

}  // namespace

TransitionTable::TransitionTable(std::string name, std::array<std::array<Poly, 3>, 9> entries)
    : name_(std::move(name)), entries_(std::move(entries)) {}

const Poly& TransitionTable::entry(std::string_view row, char out) const {
  Pattern r(row);
  if (r.length() != 2) throw std::invalid_argument("table rows are length-2 patterns");
  return entry(r.index(), Pattern(std::string(1, out)).at(0));
}

void TransitionTable::validate() const {
  const Poly one({1});
  const Rat samples[] = {Rat(1, 1000), Rat(1, 100), Rat(1, 10), Rat(1, 4), Rat(49, 100)};
  for (std::size_t r = 0; r < 9; ++r) {
    const auto& row = entries_[r];
    if (row[0] + row[1] + row[2] != one) {
      throw std::invalid_argument("transition row " + Pattern::from_index(r, 2).str() +
                                  " does not sum to 1");
    }
    for (const auto& p : row) {
      for (const auto& x : samples) {
        if (sgn(p(x)) < 0) {
          throw std::invalid_argument("negative transition entry in row " +
                                      Pattern::from_index(r, 2).str());
        }
      }
    }
  }
}

TransitionTable TransitionTable::vertex_nand() {
  const Row keep{lin(0, 1), lin(1, -1), Poly()};
  const Row flip{lin(1, -1), lin(0, 1), Poly()};
  const Row unk{lin(0, 1), lin(0, 1), lin(1, -2)};
  return make("vertex-nand", {keep, keep, keep, keep, flip, unk, keep, unk, unk});
}

TransitionTable TransitionTable::edge_nand() {
  return make("edge-nand",
              {Row{quad(0, 0, 1), quad(1, 0, -1), Poly()},
               Row{quad(0, 1, -1), quad(1, -1, 1), Poly()},
               Row{quad(0, 0, 1), quad(1, -1, 1), quad(0, 1, -2)},
               Row{quad(0, 1, -1), quad(1, -1, 1), Poly()},
               Row{quad(1, -2, 1), quad(0, 2, -1), Poly()},
               Row{quad(0, 1, -1), quad(0, 2, -1), quad(1, -3, 2)},
               Row{quad(0, 0, 1), quad(1, -1, 1), quad(0, 1, -2)},
               Row{quad(0, 1, -1), quad(0, 2, -1), quad(1, -3, 2)},
               Row{quad(0, 0, 1), quad(0, 2, -1), lin(1, -2)}});
}

TransitionTable TransitionTable::imp() {
  return make("imp",
              {Row{quad(0, 1, -1), quad(1, -1, 1), Poly()},
               Row{quad(0, 0, 1), quad(1, 0, -1), Poly()},
               Row{quad(0, 0, 1), quad(1, -1, 1), quad(0, 1, -2)},
               Row{quad(1, -2, 1), quad(0, 2, -1), Poly()},
               Row{quad(0, 1, -1), quad(1, -1, 1), Poly()},
               Row{quad(0, 1, -1), quad(0, 2, -1), quad(1, -3, 2)},
               Row{quad(0, 1, -1), quad(0, 2, -1), quad(1, -3, 2)},
               Row{quad(0, 0, 1), quad(1, -1, 1), quad(0, 1, -2)},
               Row{quad(0, 0, 1), quad(0, 2, -1), lin(1, -2)}});
}

PolyMatrix build_C(const TransitionTable& table, int ell) {
  if (ell < 1) throw std::invalid_argument("build_C needs ell >= 1");
  const std::size_t rows = pattern_count(ell + 1);
  const std::size_t cols = pattern_count(ell);
  PolyMatrix C(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Pattern e = Pattern::from_index(r, ell + 1);
    std::vector<std::size_t> windows(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) {
      windows[static_cast<std::size_t>(i)] =
          static_cast<std::size_t>(e.at(i)) * 3 + static_cast<std::size_t>(e.at(i + 1));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      Pattern out = Pattern::from_index(c, ell);
      Poly prod({1});
      for (int i = 0; i < ell && !prod.is_zero(); ++i) {
        prod *= table.entry(windows[static_cast<std::size_t>(i)], out.at(i));
      }
      C.at(r, c) = std::move(prod);
    }
  }
  return C;
}

}  // namespace plp
