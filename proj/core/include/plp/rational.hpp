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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plp {

/// Arbitrary-precision rational. GMP keeps every arithmetic result in
/// canonical form (reduced, positive denominator, zero is 0/1).
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "num/den" or "num" (optional leading sign). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical text form; the denominator is omitted when it is 1.
std::string format_rat(const Rat& value);

inline int sign(const Rat& value) { return sgn(value); }

inline Rat abs_rat(const Rat& value) { return abs(value); }

/// 2^(-k) for k >= 0.
Rat pow2_neg(unsigned k);

/// 10^(-k) for k >= 0.
Rat pow10_neg(unsigned k);

}  // namespace plp
