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

#ifndef COLLATZ_CORE_PROCESS_HPP_
#define COLLATZ_CORE_PROCESS_HPP_

#include <cstddef>
#include <vector>

#include "collatz/errors.hpp"
#include "collatz/numeric.hpp"
#include "collatz/parity_sequence.hpp"

namespace collatz {

inline constexpr std::size_t kDefaultStepCap = 1'000'000;

struct Step {
  BigInt next;
  bool odd = false;
};

// The shortcut map: n/2 for even n, (3n+1)/2 for odd n.
// Throws DomainError for n = 0.
Step shortcut_step(const BigInt& n);

// Orbit of a start value up to its first strict descent.
struct StoppingRecord {
  BigInt n;
  std::size_t s = 0;  // stopping time
  std::size_t r = 0;  // odd steps among the first s
  ParitySequence q;
  BigInt value;       // first iterate below n

  friend bool operator==(const StoppingRecord&, const StoppingRecord&) = default;
};

// Thrown when the orbit has not descended within the step cap. Carries the
// partial parity word and the last iterate reached.
class StepCapExceeded : public Error {
 public:
  StepCapExceeded(BigInt start, ParitySequence partial, BigInt last_value);

  const BigInt& start() const noexcept { return start_; }
  const ParitySequence& partial() const noexcept { return partial_; }
  const BigInt& last_value() const noexcept { return last_value_; }

 private:
  BigInt start_;
  ParitySequence partial_;
  BigInt last_value_;
};

// Thrown if an orbit returns to its start value before descending.
class CycleDetected : public DomainError {
 public:
  CycleDetected(BigInt start, ParitySequence word);

  const BigInt& start() const noexcept { return start_; }
  const ParitySequence& word() const noexcept { return word_; }

 private:
  BigInt start_;
  ParitySequence word_;
};

// Iterates the shortcut map from n until the first value < n.
// n < 2 is a DomainError: 1 lies on the trivial cycle and never descends.
// Start values below 2^64 run on 128-bit words until an iterate could
// overflow, then continue on big integers.
StoppingRecord stopping_record(const BigInt& n, std::size_t step_cap = kDefaultStepCap);

struct TrajectoryPoint {
  BigInt value;
  bool odd = false;  // parity of the value this step was applied to

  friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  // True when `limit` was hit before the orbit reached 1. A start of 1 is
  // always truncated: its orbit is the 1 -> 2 -> 1 cycle.
  bool truncated = false;
};

// The first min(limit, steps-to-1) iterates of n. Requires n >= 1, limit >= 1.
Trajectory trajectory(const BigInt& n, std::size_t limit);

}  // namespace collatz

#endif  // COLLATZ_CORE_PROCESS_HPP_
