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

#ifndef COLLATZ_REPORTS_HPP_
#define COLLATZ_REPORTS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/bounds_cycles.hpp"
#include "collatz/core_process.hpp"
#include "collatz/residue_classes.hpp"
#include "collatz/scan_engine.hpp"

namespace collatz::report {

enum class ReportKind {
  kTable1,
  kStop,
  kTraj,
  kSeq,
  kTable2,
  kTable3,
  kTable4,
  kCycles,
  kBounds,
  kScan,
  kFig2,
  kFig3,
};

// How a column renders in JSON. CSV cells are always the plain text.
enum class CellKind {
  kInteger,   // exact integer, full decimal
  kWord,      // {0,1}-word or label
  kDecimal,   // approximate value, 15 significant digits
  kRational,  // exact "p/q"
  kFlag,      // 0 or 1
};

struct Column {
  std::string name;
  CellKind kind;
};

struct Schema {
  ReportKind kind;
  std::string_view name;
  std::vector<Column> columns;

  std::string header() const;  // comma-joined column names
};

using Row = std::vector<std::string>;

const Schema& schema(ReportKind kind);
const std::vector<ReportKind>& all_kinds();
// Matches a CSV header line against the known schemas.
std::optional<ReportKind> kind_from_header(std::string_view header);

enum class Format { kCsv, kJsonLines };

class RowWriter {
 public:
  virtual ~RowWriter() = default;
  virtual void write(const Row& row) = 0;
};

// CSV: header row, comma separated, no quoting, '\n' line ends.
// JSON Lines: one object per row, keys equal to the CSV header names.
// Pass write_header = false when appending to an existing file.
std::unique_ptr<RowWriter> make_writer(Format format, std::ostream& out, const Schema& schema,
                                       bool write_header = true);

std::string csv_line(const Row& row);
Row split_csv_line(std::string_view line);

// Rendering of approximate values (15 significant digits).
std::string approx(const Rational& value);
std::string approx(const Decimal& value);

// Row builders, one per report kind. Column order follows schema(kind).
Row table1_row(std::uint64_t i);
Row stop_row(const StoppingRecord& record);
Row scan_row(const ScanRow& row);
struct TrajRows {
  std::vector<Row> rows;
  bool truncated = false;
};
TrajRows traj_rows(const BigInt& n, std::size_t limit);
Row seq_row(const ParitySequence& q, const BigInt& n);
Row table2_row(const Table2Row& row);
Row table3_row(std::size_t s, const MinimalSequence& entry);
// Rows for s_min..s_max grouped by class (12i+3, 12i+7, 12i+11), then m.
std::vector<Row> table3_rows(std::size_t s_min, std::size_t s_max,
                             std::size_t cap = kDefaultEnumerateCap, unsigned workers = 1);
Row table4_row(const RatioRecord& record);
Row cycles_row(const CycleCandidate& candidate, const Rational& alpha);
Row bounds_row(std::size_t r, const Rational& alpha, unsigned digits);
// Odd-step ratio data, odd starters only.
std::optional<Row> fig2_row(const StoppingRecord& record);
// sigma_q envelope data, records with r >= 2 only.
std::optional<Row> fig3_row(const StoppingRecord& record);

struct VerifyOptions {
  std::size_t q_cap = 15;
  Rational alpha = kDefaultAlpha;
  unsigned digits = kDefaultDigits;
  std::size_t step_cap = kDefaultScanStepCap;
};

struct VerifyReport {
  std::optional<ReportKind> kind;
  std::uint64_t rows_checked = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<std::string> mismatches;  // first few, human readable

  bool ok() const noexcept { return kind.has_value() && mismatch_count == 0; }
};

// Re-reads a CSV produced by this library and re-derives every row from its
// key columns. The report kind is recognised from the header.
VerifyReport verify_csv(std::istream& in, const VerifyOptions& options = {});

}  // namespace collatz::report

#endif  // COLLATZ_REPORTS_HPP_
