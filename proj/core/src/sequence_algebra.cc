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

#include "collatz/sequence_algebra.hpp"

#include "collatz/core_process.hpp"
#include "collatz/errors.hpp"

namespace collatz {

void WeightedSum::append(bool odd) {
  if (odd) {
    sum_ *= 3;
    sum_ += next_power_;
  }
  next_power_ <<= 1;
  ++length_;
}

BigInt weighted_sum(const ParitySequence& q) {
  WeightedSum acc;
  for (std::size_t i = 0; i < q.length(); ++i) acc.append(q[i]);
  return acc.value();
}

ExactOutcome apply_closed_form(const ParitySequence& q, const BigInt& n) {
  if (n < 1) throw DomainError("apply_closed_form requires n >= 1");
  const BigInt numerator = pow3(q.ones()) * n + weighted_sum(q);
  const BigInt denominator = pow2(q.length());
  ExactOutcome out;
  out.value = Rational(numerator, denominator);
  out.exact = boost::multiprecision::denominator(out.value) == 1;
  return out;
}

Rational sigma(const ParitySequence& q) {
  return Rational(weighted_sum(q), pow2(q.length()));
}

bool is_parity_prefix(const ParitySequence& q, const BigInt& n) {
  if (n < 1) throw DomainError("is_parity_prefix requires n >= 1");
  BigInt current = n;
  for (std::size_t i = 0; i < q.length(); ++i) {
    Step step = shortcut_step(current);
    if (step.odd != q[i]) return false;
    current = std::move(step.next);
  }
  return true;
}

BigInt sigma_lower_unit(std::size_t r) {
  if (r < 1) throw DomainError("sigma_lower_unit requires r >= 1");
  return pow3(r - 1) - pow2(r - 1);
}

BigInt tight_min_weighted_sum(std::size_t r) {
  if (r < 1) throw DomainError("tight_min_weighted_sum requires r >= 1");
  return pow3(r) - pow2(r);
}

}  // namespace collatz
