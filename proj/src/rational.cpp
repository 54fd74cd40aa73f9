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

#include "orient2/rational.hpp"

#include <algorithm>

#include "orient2/error.hpp"

namespace orient2 {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorCode::kInvalidArgument,
                "expected an exact rational p/q, got '" + std::string(text) + "'");
  }
  BigInt p(std::string(num.front() == '+' ? num.substr(1) : num));
  BigInt q{std::string(den)};
  if (q == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational rational_pow(const Rational& base, std::uint64_t exp) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

bool is_integral(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_den() == 1;
}

BigInt ceil(const Rational& r) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return out;
}

}  // namespace orient2
