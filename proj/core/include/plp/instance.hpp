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
#include <vector>

#include "plp/lp.hpp"
#include "plp/poly.hpp"

namespace plp {

/// Dense rows x cols grid of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Largest entry degree; 0 when every entry is constant or zero.
  int max_degree() const;
  /// Largest bit length over numerators and denominators of all coefficients.
  std::size_t max_bit_length() const;

  PolyMatrix transpose() const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

/// A(delta) x >= b(delta).
struct PlpInstance {
  PolyMatrix A;
  std::vector<Poly> b;

  std::size_t m() const { return A.rows(); }
  std::size_t n() const { return A.cols(); }

  /// Throws std::invalid_argument when b does not match A.
  void validate() const;
  /// Max degree over A and b.
  int max_degree() const;
  std::size_t max_bit_length() const;

  /// The same system with delta replaced by -delta.
  PlpInstance negate_argument() const;
  /// The same system with delta replaced by c * delta.
  PlpInstance scale_argument(const Rat& c) const;
  /// The ordinary LP obtained by fixing delta.
  LinProgram at(const Rat& delta) const;

  friend bool operator==(const PlpInstance&, const PlpInstance&) = default;
};

}  // namespace plp
