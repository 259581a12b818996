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

#include <string>

#include "plp/poly.hpp"

namespace plp {

/// Reduced rational function num/den in delta.
///
/// Canonical form: gcd(num, den) = 1 and the lowest-order nonzero coefficient
/// of den is 1, so den is positive on some interval (0, t). Two equal rational
/// functions therefore have identical representations.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(Rat(1))) {}
  explicit RatFunc(Poly num) : RatFunc(std::move(num), Poly::constant(Rat(1))) {}
  /// Throws std::domain_error if den is the zero polynomial.
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws std::domain_error when x is a pole.
  Rat operator()(const Rat& x) const;

  RatFunc negate_argument() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const Poly& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(std::string_view var = "d") const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace plp
