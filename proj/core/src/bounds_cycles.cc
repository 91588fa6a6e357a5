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

#include "collatz/bounds_cycles.hpp"

#include <algorithm>
#include <functional>

#include "collatz/errors.hpp"
#include "collatz/sequence_algebra.hpp"

namespace collatz {

RatioFlags check_ratio_constraints(std::size_t s, std::size_t r, unsigned digits) {
  if (s < 1) throw DomainError("check_ratio_constraints requires s >= 1");
  RatioFlags flags;
  flags.linear = 3 * r < 2 * s;
  const BigInt three_r = pow3(r);
  flags.power = pow2(s - 1) < three_r && three_r < pow2(s);

  const Decimal& log32 = log3_of_2(digits);
  const Decimal ratio = Decimal(static_cast<long>(r), digits) / s;
  const Decimal lower = log32 * (s - 1) / s;
  flags.ratio_lower = lower < ratio;
  flags.ratio_upper = ratio < log32;
  return flags;
}

std::size_t unique_s_for_r(std::size_t r) {
  // 3^r is never a power of two, so floor(log2 3^r) + 1 is the only s with
  // 2^(s-1) < 3^r < 2^s.
  return bit_floor_log2(pow3(r)) + 1;
}

namespace {

void require_positive_gap(std::size_t r, std::size_t s, const char* what) {
  if (r < 1) throw DomainError(std::string(what) + " requires r >= 1");
  if (pow2(s) <= pow3(r)) {
    throw DomainError(std::string(what) + " requires 2^s > 3^r (s = " + std::to_string(s) +
                      ", r = " + std::to_string(r) + ")");
  }
}

}  // namespace

CycleCandidate cycle_candidate(const ParitySequence& q) {
  require_positive_gap(q.ones(), q.length(), "cycle_candidate");
  CycleCandidate c;
  c.q = q;
  c.numerator = weighted_sum(q);
  c.denominator = pow2(q.length()) - pow3(q.ones());
  c.m1 = Rational(c.numerator, c.denominator);
  c.is_integer = boost::multiprecision::denominator(c.m1) == 1;
  return c;
}

std::vector<CycleCandidate> enumerate_cycle_candidates(std::size_t s_max, std::size_t cap) {
  constexpr std::size_t kWordLimit = 40;  // keeps Sigma < 6^s inside 128 bits
  if (s_max > cap || s_max > kWordLimit) {
    throw ResourceError("enumerate_cycle_candidates: s_max = " + std::to_string(s_max) +
                        " exceeds the cap of " + std::to_string(std::min(cap, kWordLimit)));
  }
  std::vector<CycleCandidate> hits;
  std::vector<u128> pow3_table(s_max + 1, 1);
  for (std::size_t i = 1; i <= s_max; ++i) pow3_table[i] = pow3_table[i - 1] * 3;

  ParitySequence word;
  // Depth-first over words with incremental Sigma.
  std::function<void(u128, std::size_t)> visit = [&](u128 sum, std::size_t r) {
    const std::size_t s = word.length();
    if (s >= 1) {
      const u128 two_s = u128{1} << s;
      if (r >= 1 && two_s > pow3_table[r] && sum % (two_s - pow3_table[r]) == 0) {
        hits.push_back(cycle_candidate(word));
      }
    }
    if (s == s_max) return;
    const u128 bit = u128{1} << s;
    word.push_back(true);
    visit(3 * sum + bit, r + 1);
    word.pop_back();
    if (s > 0) {
      word.push_back(false);
      visit(sum, r);
      word.pop_back();
    }
  };
  visit(0, 0);

  std::stable_sort(hits.begin(), hits.end(), [](const CycleCandidate& a, const CycleCandidate& b) {
    if (a.q.length() != b.q.length()) return a.q.length() < b.q.length();
    return a.q.str() > b.q.str();
  });
  return hits;
}

Rational cycle_upper_bound(std::size_t r, std::size_t s, const Rational& alpha) {
  require_positive_gap(r, s, "cycle_upper_bound");
  return alpha * Rational(sigma_lower_unit(r), pow2(s) - pow3(r));
}

CycleLowerBound cycle_lower_bound(std::size_t r, std::size_t s, unsigned digits) {
  require_positive_gap(r, s, "cycle_lower_bound");
  const Decimal one(1, digits);
  CycleLowerBound out{Decimal(digits), Decimal(digits), Decimal(digits), false};
  out.ratio_gap = one - Decimal(Rational(pow3(r), pow2(s)), digits);
  // t = 2^-((1 - log3 2) s + 1) = exp(-((1 - log3 2) s + 1) ln 2)
  Decimal exponent = (one - log3_of_2(digits)) * s + one;
  out.tail = (-(exponent * Decimal::ln2(digits))).exp();
  out.value = (one - out.ratio_gap - out.tail * 3) / (out.ratio_gap * 3);
  out.meaningful = out.value.is_positive();
  return out;
}

Decimal matveev_constant_value(unsigned digits) {
  const Decimal two_pow = Decimal(2, digits).pow(Decimal(7, digits) / 2);
  return Decimal::euler(digits) * two_pow * Decimal(24'300'000, digits) * Decimal::ln3(digits);
}

BigInt matveev_constant() { return matveev_constant_value(kDefaultDigits).round_integer(); }

double matveev_log10_gap_bound(std::size_t s) {
  if (s < 1) throw DomainError("matveev_log10_gap_bound requires s >= 1");
  const unsigned digits = kDefaultDigits;
  const Decimal es = Decimal::euler(digits) * s;
  return (-(matveev_constant_value(digits) * es.log10())).to_double();
}

namespace {

void fill_record(RatioRecord& rec, unsigned digits) {
  const Decimal& log32 = log3_of_2(digits);
  rec.ratio = Decimal(static_cast<long>(rec.r), digits) / rec.s;
  rec.gap = log32 - rec.ratio;
  rec.lower = log32 * (rec.s - 1) / rec.s;
  rec.lower_ok = rec.lower < rec.ratio;
  rec.log10_gap = rec.gap.log10().to_double();
  const BigInt three_r = pow3(rec.r);
  rec.ratio_ok = pow2(rec.s - 1) < three_r && three_r < pow2(rec.s);
}

}  // namespace

RatioRecord ratio_record_at(std::size_t s, unsigned digits) {
  if (s < 1) throw DomainError("ratio_record_at requires s >= 1");
  RatioRecord rec{s, 0, Decimal(digits), 0.0, false, false, Decimal(digits), Decimal(digits)};
  rec.r = static_cast<std::size_t>((log3_of_2(digits) * s).floor_u64());
  fill_record(rec, digits);
  return rec;
}

std::vector<RatioRecord> ratio_records(std::size_t s_min, std::size_t s_max, unsigned digits) {
  if (s_min < 2) throw DomainError("ratio_records requires s_min >= 2");
  if (digits < 30) throw DomainError("ratio_records requires at least 30 digits");
  std::vector<RatioRecord> out;
  const Decimal& log32 = log3_of_2(digits);
  Decimal scaled(digits);
  Decimal frac(digits);
  // The gap log3(2) - r/s shrinks exactly when r/s grows, so records are
  // decided on the exact ratio; equal ratios such as 918/1455 = 306/485 tie.
  u128 best_r = 0;
  u128 best_s = 1;
  bool have_best = false;
  for (std::size_t s = s_min; s <= s_max; ++s) {
    scaled = log32;
    scaled *= s;
    const std::uint64_t r = scaled.floor_u64();
    frac = scaled;
    frac -= r;
    // (1 - 1/s) log3 2 < r/s  <=>  frac(s log3 2) < log3 2
    if (!(frac < log32)) continue;
    if (have_best && !(static_cast<u128>(r) * best_s > best_r * s)) continue;
    best_r = r;
    best_s = s;
    have_best = true;
    RatioRecord rec{s, static_cast<std::size_t>(r), Decimal(digits), 0.0, false, false,
                    Decimal(digits), Decimal(digits)};
    fill_record(rec, digits);
    out.push_back(std::move(rec));
  }
  return out;
}

StoppingBand stopping_number_bounds(const BigInt& m, std::size_t r, std::size_t s,
                                    const Rational& alpha) {
  if (m < 3 || !boost::multiprecision::bit_test(m, 0)) {
    throw DomainError("stopping_number_bounds requires odd m >= 3");
  }
  if (r < 1) throw DomainError("stopping_number_bounds requires r >= 1");
  const Rational base(pow3(r), pow2(s));
  const Rational unit(sigma_lower_unit(r), pow2(s) * m);
  return {base + unit, base + alpha * unit};
}

}  // namespace collatz
