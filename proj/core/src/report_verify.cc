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

#include <istream>
#include <string>

#include "collatz/errors.hpp"
#include "collatz/reports.hpp"

namespace collatz::report {
namespace {

constexpr std::size_t kKeptMismatches = 20;

std::size_t parse_size(const std::string& text) {
  const auto value = to_u64(parse_natural(text));
  if (!value) throw ParseError("value out of range: " + text);
  return static_cast<std::size_t>(*value);
}

// Walks trajectory rows in file order, reusing the previous iterate when
// rows are consecutive steps of the same start.
class TrajCursor {
 public:
  Row derive(const Row& row) {
    const BigInt n = parse_natural(row.at(0));
    const std::size_t step = parse_size(row.at(1));
    if (step == 0) throw DomainError("trajectory steps start at 1");
    if (!valid_ || n != n_ || step != step_ + 1) {
      n_ = n;
      step_ = 0;
      value_ = n;
      valid_ = true;
    }
    if (n < 1) throw DomainError("trajectory start must be >= 1");
    bool odd = false;
    while (step_ < step) {
      Step next = shortcut_step(value_);
      odd = next.odd;
      value_ = std::move(next.next);
      ++step_;
    }
    return {n.str(), std::to_string(step), value_.str(), odd ? "1" : "0"};
  }

 private:
  bool valid_ = false;
  BigInt n_;
  std::size_t step_ = 0;
  BigInt value_;
};

Row derive(ReportKind kind, const Row& row, const VerifyOptions& options, TrajCursor& traj) {
  switch (kind) {
    case ReportKind::kTable1:
      return table1_row(parse_size(row.at(0)));
    case ReportKind::kStop:
      return stop_row(stopping_record(parse_natural(row.at(0)), options.step_cap));
    case ReportKind::kScan: {
      const BigInt n = parse_natural(row.at(0));
      ScanRow scanned{n, std::nullopt};
      try {
        scanned.record = stopping_record(n, options.step_cap);
      } catch (const StepCapExceeded&) {
      }
      return scan_row(scanned);
    }
    case ReportKind::kTraj:
      return traj.derive(row);
    case ReportKind::kSeq:
      return seq_row(parse_sequence(row.at(0)), parse_natural(row.at(5)));
    case ReportKind::kTable2: {
      const auto n = to_u64(parse_natural(row.at(0)));
      if (!n || *n % 4 != 3) throw DomainError("table2 rows need n = 3 (mod 4)");
      StoppingRecord rec = stopping_record(BigInt(*n), options.step_cap);
      Table2Row t2;
      t2.n = *n;
      t2.cls = static_cast<Mod12Class>(*n % 12);
      if (rec.q.length() <= options.q_cap) t2.q = rec.q;
      t2.value = rec.value;
      return table2_row(t2);
    }
    case ReportKind::kTable3: {
      const std::size_t s = parse_size(row.at(0));
      const BigInt m = parse_natural(row.at(7));
      StoppingRecord rec = stopping_record(m, options.step_cap);
      if (rec.s != s) {
        throw DomainError("m = " + m.str() + " has stopping time " + std::to_string(rec.s));
      }
      const auto cls = classify(m).mod12;
      if (!cls) throw DomainError("table3 starting numbers are odd");
      return table3_row(s, {m, rec.q, *cls});
    }
    case ReportKind::kTable4:
      return table4_row(ratio_record_at(parse_size(row.at(0)), options.digits));
    case ReportKind::kCycles:
      return cycles_row(cycle_candidate(parse_sequence(row.at(0))), options.alpha);
    case ReportKind::kBounds:
      return bounds_row(parse_size(row.at(0)), options.alpha, options.digits);
    case ReportKind::kFig2: {
      auto out = fig2_row(stopping_record(parse_natural(row.at(0)), options.step_cap));
      if (!out) throw DomainError("fig2 rows are odd starters");
      return *out;
    }
    case ReportKind::kFig3: {
      auto out = fig3_row(stopping_record(parse_natural(row.at(0)), options.step_cap));
      if (!out) throw DomainError("fig3 rows need r >= 2");
      return *out;
    }
  }
  throw DomainError("unknown report kind");
}

}  // namespace

VerifyReport verify_csv(std::istream& in, const VerifyOptions& options) {
  VerifyReport report;
  std::string line;
  if (!std::getline(in, line)) {
    report.mismatch_count = 1;
    report.mismatches.push_back("empty input: no header row");
    return report;
  }
  report.kind = kind_from_header(line);
  if (!report.kind) {
    report.mismatch_count = 1;
    report.mismatches.push_back("unrecognised header: " + line);
    return report;
  }
  const std::size_t width = schema(*report.kind).columns.size();
  TrajCursor traj;
  std::uint64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const Row row = split_csv_line(line);
    ++report.rows_checked;
    std::string problem;
    if (row.size() != width) {
      problem = "expected " + std::to_string(width) + " fields, found " + std::to_string(row.size());
    } else {
      try {
        const Row expected = derive(*report.kind, row, options, traj);
        if (expected != row) problem = "expected " + csv_line(expected);
      } catch (const std::exception& e) {
        problem = e.what();
      }
    }
    if (!problem.empty()) {
      ++report.mismatch_count;
      if (report.mismatches.size() < kKeptMismatches) {
        report.mismatches.push_back("line " + std::to_string(line_no) + ": " + line + " -- " +
                                    problem);
      }
    }
  }
  return report;
}

}  // namespace collatz::report
