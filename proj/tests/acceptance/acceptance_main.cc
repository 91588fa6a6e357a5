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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. Tolerances are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stop_token>
#include <string>
#include <vector>

#include "collatz/bounds_cycles.hpp"
#include "collatz/core_process.hpp"
#include "collatz/reports.hpp"
#include "collatz/residue_classes.hpp"
#include "collatz/scan_engine.hpp"
#include "collatz/sequence_algebra.hpp"
#include "fixtures/reference_tables.hpp"
#include "oracles/oracles.hpp"

namespace {

using namespace collatz;
using Clock = std::chrono::steady_clock;

constexpr double kPowRatioTarget = 0.9989783;
constexpr double kPowRatioTolerance = 5e-7;
constexpr double kUpperBoundTarget = 13036.6;
constexpr double kUpperBoundTolerance = 0.1;
constexpr double kLogGapTolerance = 1e-9;
constexpr std::uint64_t kMatveevLow = 821013299;
constexpr std::uint64_t kMatveevHigh = 821013303;

// Collects detail lines for one criterion.
class Log {
 public:
  template <typename... Args>
  void note(const char* fmt, Args... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, fmt, args...);
    lines_.emplace_back(buffer);
  }
  void note_text(std::string text) { lines_.push_back(std::move(text)); }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  std::vector<std::string> lines_;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 = no runtime bound
  std::function<bool(Log&)> check;
};

std::string seconds(double s) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3fs", s);
  return buffer;
}

unsigned mod12(std::uint64_t m) { return static_cast<unsigned>(m % 12); }

bool table2(Log& log) {
  const auto rows = table2_rows(467);
  if (rows.size() != fixtures::kStopTable.size()) {
    log.note("row count %zu, expected %zu", rows.size(), fixtures::kStopTable.size());
    return false;
  }
  std::size_t bad = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& ref = fixtures::kStopTable[i];
    const std::string q = rows[i].q ? rows[i].q->str() : std::string();
    if (rows[i].n != ref.n || rows[i].value != ref.value || q != ref.q) {
      ++bad;
      log.note("n=%llu: got q=%s F=%s", static_cast<unsigned long long>(rows[i].n), q.c_str(),
               rows[i].value.str().c_str());
    }
  }
  log.note("%zu rows compared, %zu mismatches", rows.size(), bad);
  return bad == 0;
}

bool table3(Log& log) {
  using Key = std::tuple<std::size_t, unsigned, std::uint64_t>;
  std::map<Key, std::string> reference;
  for (const auto& row : fixtures::kMinimalTable) reference[{row.s, row.cls, row.m}] = row.q;

  bool ok = true;
  for (std::size_t s : {4u, 5u, 7u, 8u, 10u, 12u, 13u}) {
    const auto got = enumerate_minimal(s);
    std::map<Key, std::string> produced;
    for (const auto& e : got) {
      const auto m = *to_u64(e.m);
      produced[{s, mod12(m), m}] = e.q.str();
    }
    // The exhaustive oracle is authoritative.
    std::map<Key, std::string> brute;
    for (const auto& e : oracle::brute_minimal(s)) brute[{s, mod12(e.m), e.m}] = e.q;
    if (produced != brute) {
      log.note("s=%zu: enumeration disagrees with the exhaustive oracle", s);
      ok = false;
    }
    const bool exact_required = s <= 10;
    for (const auto& [key, q] : reference) {
      if (std::get<0>(key) != s) continue;
      const auto m = std::get<2>(key);
      const auto it = produced.find(key);
      if (it == produced.end()) {
        const auto rec = stopping_record(BigInt(m));
        log.note("s=%zu: listed m=%llu is not a minimal start of length %zu (its stopping word "
                 "is %s, length %zu)",
                 s, static_cast<unsigned long long>(m), s, rec.q.str().c_str(), rec.s);
        ok = false;
      } else if (it->second != q) {
        log.note("s=%zu m=%llu: listed sequence %s, computed %s", s,
                 static_cast<unsigned long long>(m), q.c_str(), it->second.c_str());
        if (exact_required) ok = false;
      }
    }
    for (const auto& [key, q] : produced) {
      if (reference.count(key) == 0) {
        log.note("s=%zu: computed m=%llu (%s) is not listed", s,
                 static_cast<unsigned long long>(std::get<2>(key)), q.c_str());
        if (exact_required) ok = false;
      }
    }
    log.note("s=%zu: %zu minimal starts", s, got.size());
  }
  return ok;
}

bool emptiness(Log& log) {
  bool ok = true;
  for (std::size_t s : {1u, 3u, 6u, 9u, 11u}) {
    const bool empty = enumerate_minimal(s).empty() && oracle::brute_minimal(s).empty();
    log.note("s=%zu: %s", s, empty ? "empty" : "NOT empty");
    ok = ok && empty;
  }
  return ok;
}

bool large_record(Log& log) {
  const BigInt three = pow3(306);
  const bool window = pow2(484) < three && three < pow2(485);
  const double ratio = Decimal(Rational(three, pow2(485)), 30).to_double();
  const double bound = Decimal(cycle_upper_bound(306, 485, Rational(40)), 30).to_double();
  log.note("2^484 < 3^306 < 2^485: %s", window ? "yes" : "no");
  log.note("3^306/2^485 = %.10f (target %.7f +- %.0e)", ratio, kPowRatioTarget,
           kPowRatioTolerance);
  log.note("cycle upper bound = %.6f (target %.1f +- %.1f)", bound, kUpperBoundTarget,
           kUpperBoundTolerance);
  return window && std::fabs(ratio - kPowRatioTarget) <= kPowRatioTolerance &&
         std::fabs(bound - kUpperBoundTarget) <= kUpperBoundTolerance;
}

bool ratio_table(Log& log) {
  const auto records = ratio_records(485, 25000, 50);
  const auto& ref = fixtures::kRatioTable;
  bool ok = true;
  if (records.size() != 24) {
    log.note("expected 24 records up to s=25000, got %zu", records.size());
    ok = false;
  }
  for (std::size_t i = 0; i < std::min<std::size_t>(records.size(), 24); ++i) {
    const auto& rec = records[i];
    const double diff = rec.log10_gap - ref[i].log10_gap;
    const bool pair = rec.s == ref[i].s && rec.r == ref[i].r;
    const bool close = std::fabs(diff) <= kLogGapTolerance;
    if (!pair || !close) {
      log.note("s=%zu r=%zu: log10 gap %.15f, listed %.14f, diff %.2e%s", rec.s, rec.r,
               rec.log10_gap, ref[i].log10_gap, diff, pair ? "" : " (pair differs)");
      ok = false;
    }
  }
  const auto extended = ratio_records(485, 302000, 50);
  for (std::size_t i = 24; i < ref.size(); ++i) {
    bool found = false;
    for (const auto& rec : extended) found = found || (rec.s == ref[i].s && rec.r == ref[i].r);
    log.note("(%zu, %zu) %s", ref[i].s, ref[i].r, found ? "present" : "MISSING");
    ok = ok && found;
  }
  log.note("%zu records up to s=302000", extended.size());
  return ok;
}

bool cycles(Log& log) {
  const auto found = enumerate_cycle_candidates(16);
  bool ok = !found.empty();
  for (const auto& c : found) {
    if (c.m1 != 1 || !c.q.is_trivial_cycle_word()) {
      log.note("unexpected candidate q=%s m1=%s", c.q.str().c_str(), to_string(c.m1).c_str());
      ok = false;
    }
  }
  const auto returns = oracle::brute_returns(std::uint64_t{1} << 16, 16);
  for (const auto& [m, q] : returns) {
    if (m != 1) {
      log.note("orbit of %llu returns with word %s", static_cast<unsigned long long>(m),
               q.c_str());
      ok = false;
    }
  }
  log.note("%zu integer candidates, %zu returning odd starts", found.size(), returns.size());
  return ok;
}

bool oracle_equivalence(Log& log) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> dist(2, 1000000000000ull);
  std::size_t bad = 0;
  for (int i = 0; i < 100000; ++i) {
    const std::uint64_t n = dist(rng);
    const auto rec = stopping_record(BigInt(n));
    const auto closed = apply_closed_form(rec.q, BigInt(n));
    const auto direct = oracle::naive_stop(n);
    if (!closed.exact || closed.value != Rational(BigInt(direct.value)) ||
        rec.q.str() != direct.q) {
      if (++bad <= 5) log.note("mismatch at n=%llu", static_cast<unsigned long long>(n));
    }
  }
  log.note("100000 samples, %zu mismatches", bad);
  return bad == 0;
}

bool bound_properties(Log& log) {
  std::map<std::pair<std::size_t, std::size_t>, RatioFlags> flags;
  std::map<std::string, std::size_t> violations;
  for (std::uint64_t n = 2; n <= 1000000; ++n) {
    const auto rec = stopping_record(BigInt(n));
    if (!(3 * rec.r < 2 * rec.s)) ++violations["3r < 2s"];
    if (rec.s > 2 && rec.q.back()) ++violations["last bit 0"];
    if (n % 2 == 0) continue;
    const auto key = std::make_pair(rec.s, rec.r);
    auto it = flags.find(key);
    if (it == flags.end()) it = flags.emplace(key, check_ratio_constraints(rec.s, rec.r)).first;
    if (!it->second.power) ++violations["2^(s-1) < 3^r < 2^s"];
    if (!it->second.ratio_lower || !it->second.ratio_upper) ++violations["ratio window"];
    if (!(2 * rec.value > n && rec.value < n)) ++violations["F/n in (1/2, 1)"];
    if (rec.s > 2 && !(rec.q[0] && rec.q[1])) ++violations["leading 11"];
    if (rec.r >= 1 && sigma(rec.q) < Rational(sigma_lower_unit(rec.r), pow2(rec.s))) {
      ++violations["sigma lower bound"];
    }
  }
  for (const auto& [name, count] : violations) log.note("%s: %zu violations", name.c_str(), count);
  log.note("999999 starts checked, %zu distinct (s, r) pairs", flags.size());
  return violations.empty();
}

bool family_transfer(Log& log) {
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (std::size_t s = 1; s <= 13; ++s) {
    for (const auto& entry : enumerate_minimal(s)) {
      for (unsigned k = 0; k < 3; ++k) {
        const ResidueFamily family(s, entry.m, k);
        for (int j = 0; j <= 50; ++j) {
          const BigInt n = family.member(BigInt(j));
          ++checked;
          if (!is_parity_prefix(entry.q, n) ||
              !(apply_closed_form(entry.q, n).value < Rational(n))) {
            if (++bad <= 5) log.note("violation at n=%s", n.str().c_str());
          }
        }
      }
    }
  }
  log.note("%zu family members checked, %zu violations", checked, bad);
  return bad == 0 && checked > 0;
}

bool matveev(Log& log) {
  const Decimal value = matveev_constant_value(60);
  const BigInt rounded = matveev_constant();
  log.note_text("e * 2^3.5 * 30^5 * ln 3 = " + value.to_string(40));
  log.note("rounded = %s", rounded.str().c_str());
  return rounded >= kMatveevLow && rounded <= kMatveevHigh;
}

bool alpha_scan(Log& log, const BigInt& end) {
  ScanConfig cfg;
  cfg.start = 7;
  cfg.end = end;
  cfg.class_filter = ClassFilter::k12i7;
  cfg.chunk_size = 20000;
  VectorSink sink;
  const auto stats = scan_range(cfg, sink);
  sink.rows.clear();
  const std::string ratio = stats.max_alpha_ratio ? report::approx(*stats.max_alpha_ratio) : "-";
  log.note("7..%s: %llu starts, %llu capped, max alpha ratio %s at n=%s", end.str().c_str(),
           static_cast<unsigned long long>(stats.count),
           static_cast<unsigned long long>(stats.capped), ratio.c_str(),
           stats.argmax_n.str().c_str());
  for (const auto& v : stats.violations) log.note("breach at n=%s", v.n.str().c_str());
  return stats.capped == 0 && stats.max_alpha_ratio && *stats.max_alpha_ratio <= Rational(40);
}

// Scan rows rendered as CSV into memory, with rewindable positions.
class StringSink : public RecordSink {
 public:
  explicit StringSink(std::string existing = {}) {
    out_ << existing;
    writer_ = report::make_writer(report::Format::kCsv, out_,
                                  report::schema(report::ReportKind::kScan), existing.empty());
  }
  void write(const ScanRow& row) override { writer_->write(report::scan_row(row)); }
  std::uint64_t commit() override {
    if (stop_after_ > 0 && --stop_after_ == 0) source_.request_stop();
    return out_.str().size();
  }
  void rewind(std::uint64_t position) override {
    const std::string kept = out_.str().substr(0, position);
    out_.str("");
    out_.clear();
    out_ << kept;
    writer_ = report::make_writer(report::Format::kCsv, out_,
                                  report::schema(report::ReportKind::kScan), position == 0);
  }
  std::string text() const { return out_.str(); }
  std::stop_token interrupt_after(int commits) {
    stop_after_ = commits;
    return source_.get_token();
  }

 private:
  std::ostringstream out_;
  std::unique_ptr<report::RowWriter> writer_;
  int stop_after_ = 0;
  std::stop_source source_;
};

bool determinism(Log& log) {
  ScanConfig cfg;
  cfg.start = 2;
  cfg.end = 100000;
  cfg.chunk_size = 1000;

  StringSink serial;
  scan_range(cfg, serial);
  cfg.workers = 8;
  StringSink parallel;
  scan_range(cfg, parallel);
  const bool same_workers = serial.text() == parallel.text();
  log.note("1 vs 8 workers: %s (%zu bytes)", same_workers ? "identical" : "DIFFERENT",
           serial.text().size());

  const auto ledger = std::filesystem::temp_directory_path() / "collatz_acceptance_ledger";
  std::filesystem::remove(ledger);
  cfg.checkpoint_path = ledger;
  StringSink interrupted;
  scan_range(cfg, interrupted, interrupted.interrupt_after(37));
  // A second run starts from whatever the first left behind.
  StringSink resumed(interrupted.text());
  scan_range(cfg, resumed);
  std::filesystem::remove(ledger);
  const std::size_t partial = interrupted.text().size();
  const bool same_resume = resumed.text() == serial.text();
  log.note("interrupted after %zu of %zu bytes, resumed: %s", partial, serial.text().size(),
           same_resume ? "identical" : "DIFFERENT");
  return same_workers && same_resume && partial < serial.text().size();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "stopping sequences of 12i+3/7/11 starters up to 467", 1.0, table2},
      {2, "minimal stopping sequences for s in {4,5,7,8,10,12,13}", 5.0, table3},
      {3, "no minimal sequences of length 1, 3, 6, 9, 11", 0, emptiness},
      {4, "power window and cycle bound at (r, s) = (306, 485)", 0.1, large_record},
      {5, "ratio records of log3(2) from s = 485", 10.0, ratio_table},
      {6, "only the trivial cycle among words up to length 16", 0, cycles},
      {7, "closed form equals direct iteration on 1e5 random starts", 0, oracle_equivalence},
      {8, "bound properties over all starts in [2, 1e6]", 30.0, bound_properties},
      {9, "residue families inherit minimal prefixes and descend", 0, family_transfer},
      {10, "Matveev constant", 0, matveev},
      {11, "empirical alpha over class 12i+7 up to 2400007", 0,
       [](Log& log) { return alpha_scan(log, BigInt(2400007)); }},
      {11, "empirical alpha over class 12i+7 up to 1e6", 60.0,
       [](Log& log) { return alpha_scan(log, BigInt(1000000)); }},
      {12, "scan output independent of workers and interruption", 0, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Log log;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = c.check(log);
    } catch (const std::exception& e) {
      log.note("exception: %s", e.what());
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget_seconds > 0 && elapsed > c.budget_seconds) {
      log.note("runtime %.3fs exceeds %.1fs", elapsed, c.budget_seconds);
      ok = false;
    }
    std::printf("%s [%d] %s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.title, seconds(elapsed).c_str());
    for (const auto& line : log.lines()) std::printf("       %s\n", line.c_str());
    std::fflush(stdout);
    failed += !ok;
  }
  std::printf("%d of %zu checks failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
