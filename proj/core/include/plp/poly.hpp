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

#include <climits>
#include <span>
#include <string>
#include <vector>

#include "plp/rational.hpp"

namespace plp {

/// Degree reported for the zero polynomial. Never -1, so that expressions
/// like `deg(a) + deg(b)` cannot silently alias a real degree.
inline constexpr int kZeroPolyDegree = INT_MIN;

/// Univariate polynomial in the parameter delta with rational coefficients.
/// coeffs()[k] is the coefficient of delta^k; the last stored coefficient is
/// nonzero, so the zero polynomial has no coefficients at all.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int power);
  /// The polynomial `delta`.
  static Poly identity();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  /// Lowest power carrying a nonzero coefficient; kZeroPolyDegree for zero.
  int valuation() const;

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of delta^k (zero outside the stored range).
  Rat coeff(int k) const;
  const Rat& leading() const;
  /// Coefficient at valuation(); sign of the polynomial just right of 0.
  const Rat& lowest() const;

  Rat operator()(const Rat& x) const;

  Poly derivative() const;
  /// p(c * delta).
  Poly scale_argument(const Rat& c) const;
  /// p(-delta).
  Poly negate_argument() const;
  /// p / delta^k, requires valuation() >= k.
  Poly shift_down(int k) const;
  /// p * delta^k.
  Poly shift_up(int k) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "1 - 3/2*d + d^2".
  std::string to_string(std::string_view var = "d") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

inline Rat poly_eval(const Poly& p, const Rat& x) { return p(x); }

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws std::domain_error when the divisor is zero.
PolyDivision divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) is the zero polynomial.
Poly gcd(const Poly& a, const Poly& b);

/// a * b / gcd(a, b), monic; zero if either argument is zero.
Poly lcm(const Poly& a, const Poly& b);

/// Divides by the leading coefficient.
Poly monic(const Poly& p);

/// Dot product of polynomial vectors.
Poly dot(std::span<const Poly> a, std::span<const Poly> b);

}  // namespace plp
