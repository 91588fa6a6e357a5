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

#ifndef COLLATZ_DECIMAL_HPP_
#define COLLATZ_DECIMAL_HPP_

#include <compare>
#include <cstdint>
#include <string>

#include <mpfr.h>

#include "collatz/numeric.hpp"

namespace collatz {

inline constexpr unsigned kDefaultDigits = 50;

// Resolves the default significant-digit count, honouring COLLATZ_DIGITS
// when it holds a positive integer.
unsigned default_digits();

// Binary floating point with a per-value precision given in significant
// decimal digits. Binary operations round to the wider operand precision.
// Owns its MPFR state; no global precision is ever touched, so values may be
// used freely from several threads.
class Decimal {
 public:
  explicit Decimal(unsigned digits = kDefaultDigits);
  Decimal(long value, unsigned digits);
  Decimal(const BigInt& value, unsigned digits);
  Decimal(const Rational& value, unsigned digits);
  Decimal(const Decimal& other);
  Decimal(Decimal&& other) noexcept;
  Decimal& operator=(const Decimal& other);
  Decimal& operator=(Decimal&& other) noexcept;
  ~Decimal();

  unsigned digits() const noexcept { return digits_; }

  Decimal& operator+=(const Decimal& rhs);
  Decimal& operator-=(const Decimal& rhs);
  Decimal& operator*=(const Decimal& rhs);
  Decimal& operator/=(const Decimal& rhs);
  Decimal& operator*=(unsigned long rhs);
  Decimal& operator/=(unsigned long rhs);
  Decimal& operator+=(unsigned long rhs);
  Decimal& operator-=(unsigned long rhs);

  friend Decimal operator+(Decimal lhs, const Decimal& rhs) { return lhs += rhs; }
  friend Decimal operator-(Decimal lhs, const Decimal& rhs) { return lhs -= rhs; }
  friend Decimal operator*(Decimal lhs, const Decimal& rhs) { return lhs *= rhs; }
  friend Decimal operator/(Decimal lhs, const Decimal& rhs) { return lhs /= rhs; }
  friend Decimal operator*(Decimal lhs, unsigned long rhs) { return lhs *= rhs; }
  friend Decimal operator/(Decimal lhs, unsigned long rhs) { return lhs /= rhs; }
  Decimal operator-() const;

  friend std::partial_ordering operator<=>(const Decimal& lhs, const Decimal& rhs);
  friend bool operator==(const Decimal& lhs, const Decimal& rhs) {
    return (lhs <=> rhs) == std::partial_ordering::equivalent;
  }

  bool is_negative() const;
  bool is_positive() const;

  Decimal log() const;
  Decimal log10() const;
  Decimal exp() const;
  // Raises this value to a real power.
  Decimal pow(const Decimal& exponent) const;
  BigInt floor_integer() const;
  // Floor as a machine word; the value must lie in [0, 2^64).
  std::uint64_t floor_u64() const;
  // Nearest integer, ties away from zero.
  BigInt round_integer() const;

  double to_double() const;
  // Scientific-or-fixed rendering with `significant` digits, like printf %g.
  std::string to_string(int significant = 15) const;

  static Decimal ln2(unsigned digits);
  static Decimal ln3(unsigned digits);
  static Decimal euler(unsigned digits);

 private:
  mpfr_t value_;
  unsigned digits_;
};

// log_3(2) = ln 2 / ln 3 to the requested precision, cached per thread.
const Decimal& log3_of_2(unsigned digits);

// Formats a double like printf("%.*g").
std::string format_double(double value, int significant = 15);

}  // namespace collatz

#endif  // COLLATZ_DECIMAL_HPP_
