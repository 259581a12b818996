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

#include "plp/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace plp {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int power) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  std::vector<Rat> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::identity() { return monomial(Rat(1), 1); }

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

int Poly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return static_cast<int>(k);
  }
  return kZeroPolyDegree;
}

Rat Poly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rat& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

const Rat& Poly::lowest() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no lowest coefficient");
  return coeffs_[static_cast<std::size_t>(valuation())];
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  }
  return Poly(std::move(out));
}

Poly Poly::scale_argument(const Rat& c) const {
  std::vector<Rat> out(coeffs_.size());
  Rat power(1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k] = coeffs_[k] * power;
    power *= c;
  }
  return Poly(std::move(out));
}

Poly Poly::negate_argument() const {
  Poly out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

Poly Poly::shift_down(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return Poly();
  if (valuation() < k) throw std::domain_error("shift_down would drop nonzero coefficients");
  return Poly(std::vector<Rat>(coeffs_.begin() + k, coeffs_.end()));
}

Poly Poly::shift_up(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return Poly();
  std::vector<Rat> out(static_cast<std::size_t>(k) + coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(k)] = coeffs_[i];
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rat tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rat& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0 || !unit) os << format_rat(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (a.is_zero() || da < db) return {Poly(), a};
  std::vector<Rat> quot(static_cast<std::size_t>(da - db) + 1);
  const Rat& lead = b.leading();
  Rat tmp;
  for (int k = da; k >= db; --k) {
    const Rat& top = rem[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    Rat factor = top / lead;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), b.coeffs()[static_cast<std::size_t>(j)].get_mpq_t());
      rem[static_cast<std::size_t>(k - db + j)] -= tmp;
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  Rat inv = 1 / p.leading();
  return p * inv;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return monic(divmod(a * b, gcd(a, b)).quotient);
}

Poly dot(std::span<const Poly> a, std::span<const Poly> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Poly acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i] * b[i];
  }
  return acc;
}

}  // namespace plp
