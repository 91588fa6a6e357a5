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

#ifndef COLLATZ_SEQUENCE_ALGEBRA_HPP_
#define COLLATZ_SEQUENCE_ALGEBRA_HPP_

#include <cstddef>

#include "collatz/numeric.hpp"
#include "collatz/parity_sequence.hpp"

namespace collatz {

// Running value of the additive term of the closed form,
//   Sigma(q) = sum_{i=1..r} 3^(r-i) * 2^(pos_i - 1),
// maintained one step at a time: an even step leaves it unchanged, an odd
// step at 0-based index s maps it to 3 * Sigma + 2^s.
class WeightedSum {
 public:
  void append(bool odd);
  const BigInt& value() const noexcept { return sum_; }
  std::size_t length() const noexcept { return length_; }

 private:
  BigInt sum_ = 0;
  BigInt next_power_ = 1;  // 2^length_
  std::size_t length_ = 0;
};

// Sigma(q). Zero exactly when q has no odd step.
BigInt weighted_sum(const ParitySequence& q);

struct ExactOutcome {
  Rational value;
  bool exact = false;  // value is an integer, i.e. 2^s divides the numerator
};

// F_q(n) = (3^r n + Sigma) / 2^s as a reduced rational. Well defined for any
// word; it agrees with s shortcut steps exactly when q is n's parity prefix.
// Requires n >= 1.
ExactOutcome apply_closed_form(const ParitySequence& q, const BigInt& n);

// sigma_q = Sigma / 2^s, the start-independent part of F_q.
Rational sigma(const ParitySequence& q);

// True iff the first |q| shortcut steps from n have exactly the parities in q.
bool is_parity_prefix(const ParitySequence& q, const BigInt& n);

// 3^(r-1) - 2^(r-1): the lower-bound unit the bounds are expressed in.
// Zero for r = 1. Requires r >= 1.
BigInt sigma_lower_unit(std::size_t r);

// 3^r - 2^r: the smallest Sigma over all words with r odd steps, attained by
// 1...10...0. Requires r >= 1.
BigInt tight_min_weighted_sum(std::size_t r);

}  // namespace collatz

#endif  // COLLATZ_SEQUENCE_ALGEBRA_HPP_
