// Copyright 2026 The collatz_stop Authors.
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

#include "collatz/numeric.hpp"

#include <limits>

#include "collatz/errors.hpp"

namespace collatz {

BigInt pow2(std::size_t exponent) {
  BigInt result = 1;
  result <<= exponent;
  return result;
}

BigInt pow3(std::size_t exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.backend().data(), 3, exponent);
  return result;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

BigInt parse_natural(std::string_view text) {
  if (!all_digits(text)) {
    throw ParseError("not a natural number: '" + std::string(text) + "'");
  }
  // Base 10 explicitly: the string constructor would read a leading 0 as octal.
  BigInt result;
  mpz_set_str(result.backend().data(), std::string(text).c_str(), 10);
  return result;
}

Rational parse_rational(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_natural(body.substr(0, slash));
    const BigInt den = parse_natural(body.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    result = Rational(num, den);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw ParseError("not a decimal number: '" + std::string(text) + "'");
    }
    const BigInt scaled = parse_natural(std::string(whole) + std::string(frac));
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    result = Rational(scaled, scale);
  } else {
    result = Rational(parse_natural(body));
  }
  return negative ? Rational(-result) : result;
}

std::optional<std::uint64_t> to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    return std::nullopt;
  }
  return value.convert_to<std::uint64_t>();
}

BigInt from_u128(u128 value) {
  BigInt result = static_cast<std::uint64_t>(value >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(value);
  return result;
}

std::size_t bit_floor_log2(const BigInt& value) {
  if (value <= 0) throw DomainError("log2 of a non-positive value");
  return boost::multiprecision::msb(value);
}

}  // namespace collatz
