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

#include <gtest/gtest.h>

#include <cmath>

#include "collatz/bounds_cycles.hpp"
#include "collatz/errors.hpp"
#include "collatz/sequence_algebra.hpp"
#include "oracles/oracles.hpp"

namespace collatz {
namespace {

TEST(RatioConstraintsTest, ExactPowerWindow) {
  const auto ok = check_ratio_constraints(485, 306);
  EXPECT_TRUE(ok.all());
  const auto off = check_ratio_constraints(485, 305);
  EXPECT_FALSE(off.power);
  const auto none = check_ratio_constraints(6, 3);
  EXPECT_FALSE(none.power);
}

TEST(RatioConstraintsTest, UniqueLengthForOddCount) {
  for (std::size_t r = 1; r < 300; ++r) {
    const std::size_t s = unique_s_for_r(r);
    EXPECT_LT(pow2(s - 1), pow3(r));
    EXPECT_LT(pow3(r), pow2(s));
  }
}

TEST(CycleCandidateTest, TrivialCycle) {
  const auto c = cycle_candidate(parse_sequence("10"));
  EXPECT_TRUE(c.is_integer);
  EXPECT_EQ(c.m1, 1);
  EXPECT_THROW(cycle_candidate(parse_sequence("00")), DomainError);
  EXPECT_THROW(cycle_candidate(parse_sequence("11")), DomainError);
}

TEST(CycleCandidateTest, NonIntegerExample) {
  const auto c = cycle_candidate(parse_sequence("1100"));
  EXPECT_EQ(c.numerator, 5);
  EXPECT_EQ(c.denominator, 7);
  EXPECT_FALSE(c.is_integer);
}

TEST(EnumerateCyclesTest, OnlyTheTrivialCycleUpToSixteen) {
  const auto found = enumerate_cycle_candidates(16);
  ASSERT_EQ(found.size(), 8u);
  for (const auto& c : found) {
    EXPECT_EQ(c.m1, 1);
    EXPECT_TRUE(c.q.is_trivial_cycle_word()) << c.q.str();
  }
  for (const auto& [m, q] : oracle::brute_returns(1u << 16, 16)) {
    EXPECT_EQ(m, 1u);
    EXPECT_EQ(q, "10");
  }
  EXPECT_THROW(enumerate_cycle_candidates(25, 20), ResourceError);
}

TEST(CycleBoundsTest, UpperBoundAtLargeRecord) {
  const Rational bound = cycle_upper_bound(306, 485, Rational(40));
  EXPECT_NEAR(Decimal(bound, 30).to_double(), 13036.5969672622, 1e-6);
}

TEST(CycleBoundsTest, LowerBound) {
  const auto lb = cycle_lower_bound(306, 485, 50);
  EXPECT_TRUE(lb.meaningful);
  EXPECT_NEAR(lb.value.to_double(), 325.914924181556, 1e-9);
  EXPECT_NEAR(lb.ratio_gap.to_double(), 1.021716823478e-3, 1e-12);
}

TEST(MatveevTest, Constant) {
  EXPECT_EQ(matveev_constant(), 821013301);
  EXPECT_EQ(matveev_constant_value(40).to_string(12), "821013300.694");
  EXPECT_LT(matveev_log10_gap_bound(485), -2.5e9);
}

TEST(RatioRecordsTest, PairsMatchExactOracle) {
  const auto got = ratio_records(485, 25000, 50);
  const auto expect = oracle::ratio_record_pairs(485, 25000);
  ASSERT_EQ(got.size(), expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].s, expect[i].s);
    EXPECT_EQ(got[i].r, expect[i].r);
    EXPECT_TRUE(got[i].ratio_ok);
    EXPECT_TRUE(got[i].lower_ok);
  }
}

TEST(RatioRecordsTest, SmallRangeMatchesOracle) {
  const auto got = ratio_records(2, 3000, 40);
  const auto expect = oracle::ratio_record_pairs(2, 3000);
  ASSERT_EQ(got.size(), expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].s, expect[i].s);
}

TEST(RatioRecordsTest, LogGapIsConsistentWithGap) {
  const auto rec = ratio_record_at(485, 50);
  EXPECT_EQ(rec.r, 306u);
  EXPECT_NEAR(rec.log10_gap, std::log10(rec.gap.to_double()), 1e-12);
  EXPECT_THROW(ratio_records(1, 10, 50), DomainError);
  EXPECT_THROW(ratio_records(2, 10, 10), DomainError);
}

TEST(StoppingBandTest, BracketsActualValues) {
  // 7 -> 5 with q = 1110100, so F/m = 5/7.
  const auto band = stopping_number_bounds(BigInt(7), 4, 7);
  EXPECT_LT(band.lower, Rational(5, 7));
  EXPECT_GT(band.upper, Rational(5, 7));
  EXPECT_THROW(stopping_number_bounds(BigInt(8), 4, 7), DomainError);
}

}  // namespace
}  // namespace collatz
