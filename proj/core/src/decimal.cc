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

#include "collatz/decimal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <utility>

#include "collatz/errors.hpp"

namespace collatz {
namespace {

// Decimal digits to binary precision, with guard bits.
mpfr_prec_t bits_for(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

}  // namespace

unsigned default_digits() {
  if (const char* env = std::getenv("COLLATZ_DIGITS")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0 && parsed < 100000) {
      return static_cast<unsigned>(parsed);
    }
  }
  return kDefaultDigits;
}

Decimal::Decimal(unsigned digits) : digits_(std::max(digits, 1u)) {
  mpfr_init2(value_, bits_for(digits_));
  mpfr_set_zero(value_, 1);
}

Decimal::Decimal(long value, unsigned digits) : Decimal(digits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Decimal::Decimal(const BigInt& value, unsigned digits) : Decimal(digits) {
  mpfr_set_z(value_, value.backend().data(), MPFR_RNDN);
}

Decimal::Decimal(const Rational& value, unsigned digits) : Decimal(digits) {
  mpfr_set_q(value_, value.backend().data(), MPFR_RNDN);
}

Decimal::Decimal(const Decimal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Decimal::Decimal(Decimal&& other) noexcept : Decimal(other.digits_) {
  mpfr_swap(value_, other.value_);
}

Decimal& Decimal::operator=(const Decimal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Decimal& Decimal::operator=(Decimal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

Decimal::~Decimal() { mpfr_clear(value_); }

namespace {

void widen(mpfr_t target, unsigned& digits, unsigned other_digits) {
  if (other_digits > digits) {
    mpfr_prec_round(target, bits_for(other_digits), MPFR_RNDN);
    digits = other_digits;
  }
}

}  // namespace

Decimal& Decimal::operator+=(const Decimal& rhs) {
  widen(value_, digits_, rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator-=(const Decimal& rhs) {
  widen(value_, digits_, rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator*=(const Decimal& rhs) {
  widen(value_, digits_, rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator/=(const Decimal& rhs) {
  widen(value_, digits_, rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator*=(unsigned long rhs) {
  mpfr_mul_ui(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator/=(unsigned long rhs) {
  mpfr_div_ui(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator+=(unsigned long rhs) {
  mpfr_add_ui(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator-=(unsigned long rhs) {
  mpfr_sub_ui(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Decimal Decimal::operator-() const {
  Decimal result(*this);
  mpfr_neg(result.value_, result.value_, MPFR_RNDN);
  return result;
}

std::partial_ordering operator<=>(const Decimal& lhs, const Decimal& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool Decimal::is_negative() const { return mpfr_sgn(value_) < 0; }
bool Decimal::is_positive() const { return mpfr_sgn(value_) > 0; }

Decimal Decimal::log() const {
  Decimal result(digits_);
  mpfr_log(result.value_, value_, MPFR_RNDN);
  return result;
}

Decimal Decimal::log10() const {
  Decimal result(digits_);
  mpfr_log10(result.value_, value_, MPFR_RNDN);
  return result;
}

Decimal Decimal::exp() const {
  Decimal result(digits_);
  mpfr_exp(result.value_, value_, MPFR_RNDN);
  return result;
}

Decimal Decimal::pow(const Decimal& exponent) const {
  Decimal result(std::max(digits_, exponent.digits_));
  mpfr_pow(result.value_, value_, exponent.value_, MPFR_RNDN);
  return result;
}

BigInt Decimal::floor_integer() const {
  if (!mpfr_number_p(value_)) throw DomainError("floor of a non-finite value");
  BigInt result;
  mpfr_get_z(result.backend().data(), value_, MPFR_RNDD);
  return result;
}

std::uint64_t Decimal::floor_u64() const {
  if (!mpfr_number_p(value_) || mpfr_sgn(value_) < 0 || !mpfr_fits_ulong_p(value_, MPFR_RNDD)) {
    throw DomainError("floor_u64 outside [0, 2^64)");
  }
  return mpfr_get_ui(value_, MPFR_RNDD);
}

BigInt Decimal::round_integer() const {
  if (!mpfr_number_p(value_)) throw DomainError("rounding a non-finite value");
  Decimal rounded(digits_);
  mpfr_round(rounded.value_, value_);
  BigInt result;
  mpfr_get_z(result.backend().data(), rounded.value_, MPFR_RNDN);
  return result;
}

double Decimal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string Decimal::to_string(int significant) const {
  char* text = nullptr;
  if (mpfr_asprintf(&text, "%.*Rg", significant, value_) < 0) {
    throw ResourceError("decimal formatting failed");
  }
  std::string result(text);
  mpfr_free_str(text);
  return result;
}

Decimal Decimal::ln2(unsigned digits) {
  Decimal result(digits);
  mpfr_const_log2(result.value_, MPFR_RNDN);
  return result;
}

Decimal Decimal::ln3(unsigned digits) { return Decimal(3, digits).log(); }

Decimal Decimal::euler(unsigned digits) { return Decimal(1, digits).exp(); }

const Decimal& log3_of_2(unsigned digits) {
  thread_local std::map<unsigned, Decimal> cache;
  auto it = cache.find(digits);
  if (it == cache.end()) {
    it = cache.emplace(digits, Decimal::ln2(digits) / Decimal::ln3(digits)).first;
  }
  return it->second;
}

std::string format_double(double value, int significant) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant, value);
  return buffer;
}

}  // namespace collatz
