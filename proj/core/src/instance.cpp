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

#include "plp/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace plp {

namespace {

std::size_t bit_length(const Poly& p) {
  std::size_t best = 0;
  for (const auto& c : p.coeffs()) {
    best = std::max({best, mpz_sizeinbase(c.get_num_mpz_t(), 2),
                     mpz_sizeinbase(c.get_den_mpz_t(), 2)});
  }
  return best;
}

}  // namespace

int PolyMatrix::max_degree() const {
  int d = 0;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

std::size_t PolyMatrix::max_bit_length() const {
  std::size_t best = 0;
  for (const auto& e : entries_) best = std::max(best, bit_length(e));
  return best;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

void PlpInstance::validate() const {
  if (b.size() != A.rows()) throw std::invalid_argument("rhs length differs from row count");
}

int PlpInstance::max_degree() const {
  int d = A.max_degree();
  for (const auto& p : b) d = std::max(d, p.degree());
  return d;
}

std::size_t PlpInstance::max_bit_length() const {
  std::size_t best = A.max_bit_length();
  for (const auto& p : b) best = std::max(best, bit_length(p));
  return best;
}

PlpInstance PlpInstance::negate_argument() const {
  return scale_argument(Rat(-1));
}

PlpInstance PlpInstance::scale_argument(const Rat& c) const {
  PlpInstance out{PolyMatrix(m(), n()), {}};
  for (std::size_t i = 0; i < m(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) out.A.at(i, j) = A.at(i, j).scale_argument(c);
    out.b.push_back(b[i].scale_argument(c));
  }
  return out;
}

LinProgram PlpInstance::at(const Rat& delta) const {
  validate();
  LinProgram prog;
  prog.dim = n();
  for (std::size_t i = 0; i < m(); ++i) {
    LinConstraint con;
    con.coeffs.reserve(n());
    for (std::size_t j = 0; j < n(); ++j) con.coeffs.push_back(A.at(i, j)(delta));
    con.rhs = b[i](delta);
    con.sense = Sense::kGE;
    prog.constraints.push_back(std::move(con));
  }
  return prog;
}

}  // namespace plp
