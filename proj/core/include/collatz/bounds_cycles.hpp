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

#ifndef COLLATZ_BOUNDS_CYCLES_HPP_
#define COLLATZ_BOUNDS_CYCLES_HPP_

#include <cstddef>
#include <vector>

#include "collatz/decimal.hpp"
#include "collatz/numeric.hpp"
#include "collatz/parity_sequence.hpp"

namespace collatz {

// Empirical envelope factor for sigma_q over the lower-bound unit.
inline const Rational kDefaultAlpha{40};

struct RatioFlags {
  bool linear = false;       // 3r < 2s
  bool power = false;        // 2^(s-1) < 3^r < 2^s, exact
  bool ratio_lower = false;  // (1 - 1/s) log3(2) < r/s
  bool ratio_upper = false;  // r/s < log3(2)

  bool all() const noexcept { return linear && power && ratio_lower && ratio_upper; }
};

// Power flags use exact integer comparison; ratio flags use `digits`-digit
// decimals. Requires s >= 1.
RatioFlags check_ratio_constraints(std::size_t s, std::size_t r,
                                   unsigned digits = kDefaultDigits);

// The unique s with 2^(s-1) < 3^r < 2^s, i.e. one more than floor(log2 3^r).
std::size_t unique_s_for_r(std::size_t r);

// A word q read as a would-be cycle: F_q(m1) = m1 forces
// m1 = Sigma / (2^s - 3^r).
struct CycleCandidate {
  ParitySequence q;
  BigInt numerator;    // Sigma
  BigInt denominator;  // 2^s - 3^r > 0
  Rational m1;
  bool is_integer = false;
};

// Requires r >= 1 and 2^s > 3^r; DomainError otherwise.
CycleCandidate cycle_candidate(const ParitySequence& q);

inline constexpr std::size_t kDefaultCycleCap = 20;

// Every word of length <= s_max that starts with an odd step, has r >= 1 and
// 2^s > 3^r, and yields an integer m1. Ordered by length, then word text
// descending ("1" before "0"). Throws ResourceError when s_max > cap.
std::vector<CycleCandidate> enumerate_cycle_candidates(std::size_t s_max,
                                                       std::size_t cap = kDefaultCycleCap);

// alpha (3^(r-1) - 2^(r-1)) / (2^s - 3^r), an upper bound for a cycle number
// with these counts. Requires r >= 1 and 2^s > 3^r.
Rational cycle_upper_bound(std::size_t r, std::size_t s, const Rational& alpha = kDefaultAlpha);

// M = (1 - e - 3 t) / (3 e) with e = 1 - 3^r/2^s and
// t = 2^-((1 - log3(2)) s + 1). May be non-positive for loose (r, s).
struct CycleLowerBound {
  Decimal ratio_gap;  // e
  Decimal tail;       // t
  Decimal value;      // M
  bool meaningful = false;  // M > 0
};

CycleLowerBound cycle_lower_bound(std::size_t r, std::size_t s,
                                  unsigned digits = kDefaultDigits);

// e * 2^3.5 * 30^5 * ln 3 at the requested precision.
Decimal matveev_constant_value(unsigned digits = kDefaultDigits);
// Nearest integer to matveev_constant_value().
BigInt matveev_constant();
// log10 of (e s)^-C, the lower bound for 1 - 3^r/2^s. Requires s >= 1.
double matveev_log10_gap_bound(std::size_t s);

struct RatioRecord {
  std::size_t s = 0;
  std::size_t r = 0;
  Decimal gap;          // log3(2) - r/s
  double log10_gap = 0;
  bool lower_ok = false;  // (1 - 1/s) log3(2) < r/s
  bool ratio_ok = false;  // 2^(s-1) < 3^r < 2^s, exact
  Decimal lower;        // (1 - 1/s) log3(2)
  Decimal ratio;        // r/s
};

// Builds the record for a single s with r = floor(s log3(2)).
RatioRecord ratio_record_at(std::size_t s, unsigned digits = kDefaultDigits);

// Scans s in [s_min, s_max] ascending and keeps each s whose gap is a new
// strict minimum among those satisfying the lower ratio bound. Requires
// s_min >= 2 and digits >= 30.
std::vector<RatioRecord> ratio_records(std::size_t s_min, std::size_t s_max,
                                       unsigned digits = kDefaultDigits);

struct StoppingBand {
  Rational lower;
  Rational upper;
};

// Band for F_q(m)/m:
//   lower = 3^r/2^s + (3^(r-1) - 2^(r-1)) / (2^s m)
//   upper = 3^r/2^s + alpha (3^(r-1) - 2^(r-1)) / (2^s m)
// Requires m odd >= 3 and r >= 1.
StoppingBand stopping_number_bounds(const BigInt& m, std::size_t r, std::size_t s,
                                    const Rational& alpha = kDefaultAlpha);

}  // namespace collatz

#endif  // COLLATZ_BOUNDS_CYCLES_HPP_
