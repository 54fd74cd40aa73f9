// Copyright 2026 The orient2 Authors
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

#ifndef ORIENT2_RATIONAL_HPP_
#define ORIENT2_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace orient2 {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or an integer "p". Decimal notation is rejected so that no
// value is silently rounded. Throws Error(kInvalidArgument).
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

// (num/den)^exp, exact.
Rational rational_pow(const Rational& base, std::uint64_t exp);

BigInt binomial(std::uint64_t n, std::uint64_t k);

bool is_integral(const Rational& r);

// ceil for exact rationals.
BigInt ceil(const Rational& r);

}  // namespace orient2

#endif  // ORIENT2_RATIONAL_HPP_
