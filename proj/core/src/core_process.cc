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

#include "collatz/core_process.hpp"

#include <limits>
#include <utility>

namespace collatz {

StepCapExceeded::StepCapExceeded(BigInt start, ParitySequence partial, BigInt last_value)
    : Error("orbit of " + start.str() + " did not descend within " +
            std::to_string(partial.length()) + " steps"),
      start_(std::move(start)),
      partial_(std::move(partial)),
      last_value_(std::move(last_value)) {}

CycleDetected::CycleDetected(BigInt start, ParitySequence word)
    : DomainError("orbit of " + start.str() + " returned to its start after " +
                  std::to_string(word.length()) + " steps"),
      start_(std::move(start)),
      word_(std::move(word)) {}

Step shortcut_step(const BigInt& n) {
  if (n <= 0) throw DomainError("shortcut_step requires n >= 1");
  if (boost::multiprecision::bit_test(n, 0)) {
    return {(3 * n + 1) >> 1, true};
  }
  return {n >> 1, false};
}

namespace {

// Odd x above this bound could overflow x + (x + 1) / 2.
constexpr u128 kWordOddLimit = std::numeric_limits<u128>::max() / 3 - 1;

}  // namespace

StoppingRecord stopping_record(const BigInt& n, std::size_t step_cap) {
  if (n < 2) {
    throw DomainError("stopping_record requires n >= 2 (got " + n.str() + ")");
  }
  StoppingRecord rec;
  rec.n = n;
  ParitySequence& q = rec.q;

  BigInt current;
  bool descended = false;
  if (const auto small = to_u64(n)) {
    const u128 start = *small;
    u128 x = start;
    for (;;) {
      if (q.length() >= step_cap) throw StepCapExceeded(n, q, from_u128(x));
      if (x & 1) {
        if (x > kWordOddLimit) break;
        x += (x >> 1) + 1;
        q.push_back(true);
      } else {
        x >>= 1;
        q.push_back(false);
      }
      if (x < start) {
        descended = true;
        break;
      }
      if (x == start) throw CycleDetected(n, q);
    }
    current = from_u128(x);
  } else {
    current = n;
  }

  while (!descended) {
    if (q.length() >= step_cap) throw StepCapExceeded(n, q, current);
    Step step = shortcut_step(current);
    current = std::move(step.next);
    q.push_back(step.odd);
    if (current < n) {
      descended = true;
    } else if (current == n) {
      throw CycleDetected(n, q);
    }
  }

  rec.s = q.length();
  rec.r = q.ones();
  rec.value = std::move(current);
  return rec;
}

Trajectory trajectory(const BigInt& n, std::size_t limit) {
  if (n < 1) throw DomainError("trajectory requires n >= 1");
  if (limit < 1) throw DomainError("trajectory requires limit >= 1");
  Trajectory result;
  result.points.reserve(limit < 4096 ? limit : 4096);
  BigInt current = n;
  for (std::size_t i = 0; i < limit; ++i) {
    Step step = shortcut_step(current);
    current = step.next;
    result.points.push_back({std::move(step.next), step.odd});
    if (current == 1 && n != 1) return result;
  }
  result.truncated = true;
  return result;
}

}  // namespace collatz
