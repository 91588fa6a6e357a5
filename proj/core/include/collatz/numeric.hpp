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

#ifndef COLLATZ_NUMERIC_HPP_
#define COLLATZ_NUMERIC_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace collatz {

// 128-bit machine word for overflow-free fast paths.
__extension__ using u128 = unsigned __int128;

// Exact arbitrary-precision integer. Values called "natural" in the API are
// non-negative by contract.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

// Exact rational, always kept in lowest terms.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

BigInt pow2(std::size_t exponent);
BigInt pow3(std::size_t exponent);

// Decimal rendering; rationals print as "p/q", or "p" when integral.
std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

// Parses a base-10 natural number. Throws ParseError.
BigInt parse_natural(std::string_view text);

// Accepts "p", "p/q" or a plain decimal such as "12.5" (converted exactly).
// Throws ParseError.
Rational parse_rational(std::string_view text);

std::optional<std::uint64_t> to_u64(const BigInt& value);

BigInt from_u128(u128 value);

// Floor of log2 for value > 0.
std::size_t bit_floor_log2(const BigInt& value);

}  // namespace collatz

#endif  // COLLATZ_NUMERIC_HPP_
