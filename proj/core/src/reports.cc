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

#include "collatz/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "collatz/errors.hpp"
#include "collatz/sequence_algebra.hpp"

namespace collatz::report {
namespace {

using K = CellKind;

std::vector<Schema> build_schemas() {
  return {
      {ReportKind::kTable1, "table1",
       {{"i", K::kInteger}, {"3i", K::kInteger}, {"3i+2", K::kInteger}, {"3i+1", K::kInteger},
        {"12i+3", K::kInteger}, {"12i+7", K::kInteger}, {"12i+11", K::kInteger},
        {"marks", K::kWord}}},
      {ReportKind::kStop, "stop",
       {{"n", K::kInteger}, {"s", K::kInteger}, {"r", K::kInteger}, {"q", K::kWord},
        {"value", K::kInteger}}},
      {ReportKind::kTraj, "traj",
       {{"n", K::kInteger}, {"step", K::kInteger}, {"value", K::kInteger},
        {"parity", K::kFlag}}},
      {ReportKind::kSeq, "seq",
       {{"q", K::kWord}, {"s", K::kInteger}, {"r", K::kInteger},
        {"weighted_sum", K::kInteger}, {"sigma", K::kRational}, {"n", K::kInteger},
        {"value", K::kRational}, {"exact", K::kFlag}, {"prefix", K::kFlag}}},
      {ReportKind::kTable2, "table2",
       {{"n", K::kInteger}, {"class", K::kWord}, {"q", K::kWord}, {"F", K::kInteger}}},
      {ReportKind::kTable3, "table3",
       {{"s", K::kInteger}, {"r", K::kInteger}, {"3r", K::kInteger}, {"2s", K::kInteger},
        {"3^r", K::kInteger}, {"2^s", K::kInteger}, {"class", K::kWord}, {"m", K::kInteger},
        {"q", K::kWord}}},
      {ReportKind::kTable4, "table4",
       {{"s", K::kInteger}, {"r", K::kInteger}, {"lower", K::kDecimal}, {"ratio", K::kDecimal},
        {"log3_2", K::kDecimal}, {"log10_gap", K::kDecimal}}},
      {ReportKind::kCycles, "cycles",
       {{"q", K::kWord}, {"s", K::kInteger}, {"r", K::kInteger}, {"numerator", K::kInteger},
        {"denominator", K::kInteger}, {"m1", K::kRational}, {"upper_bound", K::kRational}}},
      {ReportKind::kBounds, "bounds",
       {{"r", K::kInteger}, {"s", K::kInteger}, {"pow_ratio", K::kDecimal},
        {"upper_bound", K::kRational}, {"upper_bound_approx", K::kDecimal},
        {"lower_bound", K::kDecimal}, {"lower_meaningful", K::kFlag},
        {"matveev_log10_gap", K::kDecimal}, {"matveev_log10_upper", K::kDecimal}}},
      {ReportKind::kScan, "scan",
       {{"n", K::kInteger}, {"s", K::kInteger}, {"r", K::kInteger}, {"q", K::kWord},
        {"value", K::kInteger}, {"capped", K::kFlag}}},
      {ReportKind::kFig2, "fig2",
       {{"n", K::kInteger}, {"s", K::kInteger}, {"r", K::kInteger}, {"r_over_s", K::kDecimal},
        {"pow_ratio", K::kDecimal}}},
      {ReportKind::kFig3, "fig3",
       {{"m", K::kInteger}, {"s", K::kInteger}, {"r", K::kInteger}, {"pow_ratio", K::kDecimal},
        {"sigma", K::kDecimal}, {"lower_unit", K::kDecimal}, {"alpha_ratio", K::kDecimal},
        {"F_over_m", K::kDecimal}}},
  };
}

const std::vector<Schema>& schemas() {
  static const std::vector<Schema> kSchemas = build_schemas();
  return kSchemas;
}

constexpr unsigned kApproxDigits = 30;

std::string flag(bool value) { return value ? "1" : "0"; }

class CsvWriter : public RowWriter {
 public:
  CsvWriter(std::ostream& out, const Schema& schema, bool write_header) : out_(out) {
    if (write_header) out_ << schema.header() << '\n';
  }
  void write(const Row& row) override { out_ << csv_line(row) << '\n'; }

 private:
  std::ostream& out_;
};

class JsonLinesWriter : public RowWriter {
 public:
  JsonLinesWriter(std::ostream& out, const Schema& schema) : out_(out), schema_(schema) {}

  void write(const Row& row) override {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < schema_.columns.size() && i < row.size(); ++i) {
      object[schema_.columns[i].name] = cell(schema_.columns[i].kind, row[i]);
    }
    out_ << object.dump() << '\n';
  }

 private:
  static nlohmann::ordered_json cell(CellKind kind, const std::string& text) {
    if (text.empty()) return nullptr;
    switch (kind) {
      case K::kInteger:
      case K::kFlag: {
        const bool negative = text.front() == '-';
        const BigInt value(text);
        if (negative) {
          if (value >= std::numeric_limits<std::int64_t>::min()) {
            return value.convert_to<std::int64_t>();
          }
        } else if (auto small = to_u64(value)) {
          return *small;
        }
        return text;
      }
      case K::kDecimal: {
        char* end = nullptr;
        const double value = std::strtod(text.c_str(), &end);
        if (end && *end == '\0' && std::isfinite(value)) return value;
        return text;
      }
      case K::kWord:
      case K::kRational:
        break;
    }
    return text;
  }

  std::ostream& out_;
  const Schema& schema_;
};

}  // namespace

std::string Schema::header() const {
  std::string text;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) text += ',';
    text += columns[i].name;
  }
  return text;
}

const Schema& schema(ReportKind kind) {
  for (const auto& s : schemas()) {
    if (s.kind == kind) return s;
  }
  throw DomainError("unknown report kind");
}

const std::vector<ReportKind>& all_kinds() {
  static const std::vector<ReportKind> kKinds = [] {
    std::vector<ReportKind> kinds;
    for (const auto& s : schemas()) kinds.push_back(s.kind);
    return kinds;
  }();
  return kKinds;
}

std::optional<ReportKind> kind_from_header(std::string_view header) {
  if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
  for (const auto& s : schemas()) {
    if (s.header() == header) return s.kind;
  }
  return std::nullopt;
}

std::unique_ptr<RowWriter> make_writer(Format format, std::ostream& out, const Schema& schema,
                                       bool write_header) {
  if (format == Format::kJsonLines) return std::make_unique<JsonLinesWriter>(out, schema);
  return std::make_unique<CsvWriter>(out, schema, write_header);
}

std::string csv_line(const Row& row) {
  std::string line;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) line += ',';
    line += row[i];
  }
  return line;
}

Row split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  Row cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      return cells;
    }
    cells.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string approx(const Rational& value) { return Decimal(value, kApproxDigits).to_string(15); }
std::string approx(const Decimal& value) { return value.to_string(15); }

Row table1_row(std::uint64_t i) {
  const std::uint64_t a = 3 * i, b = 3 * i + 2, c = 3 * i + 1;
  auto mark = [](std::uint64_t n) {
    if (n % 2 == 0) return '-';
    return n % 4 == 1 ? 'R' : 'B';  // R: descends in two steps; B: needs four or more
  };
  return {std::to_string(i),          std::to_string(a),          std::to_string(b),
          std::to_string(c),          std::to_string(12 * i + 3), std::to_string(12 * i + 7),
          std::to_string(12 * i + 11), std::string{mark(a), mark(b), mark(c)}};
}

Row stop_row(const StoppingRecord& record) {
  return {record.n.str(), std::to_string(record.s), std::to_string(record.r), record.q.str(),
          record.value.str()};
}

Row scan_row(const ScanRow& row) {
  if (!row.record) return {row.n.str(), "", "", "", "", "1"};
  Row out = stop_row(*row.record);
  out.push_back("0");
  return out;
}

TrajRows traj_rows(const BigInt& n, std::size_t limit) {
  const Trajectory t = trajectory(n, limit);
  TrajRows out;
  out.truncated = t.truncated;
  out.rows.reserve(t.points.size());
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    out.rows.push_back({n.str(), std::to_string(i + 1), t.points[i].value.str(),
                        flag(t.points[i].odd)});
  }
  return out;
}

Row seq_row(const ParitySequence& q, const BigInt& n) {
  const ExactOutcome outcome = apply_closed_form(q, n);
  return {q.str(),
          std::to_string(q.length()),
          std::to_string(q.ones()),
          weighted_sum(q).str(),
          to_string(sigma(q)),
          n.str(),
          to_string(outcome.value),
          flag(outcome.exact),
          flag(is_parity_prefix(q, n))};
}

Row table2_row(const Table2Row& row) {
  return {std::to_string(row.n), std::string(label(row.cls)), row.q ? row.q->str() : "",
          row.value.str()};
}

Row table3_row(std::size_t s, const MinimalSequence& entry) {
  const std::size_t r = entry.q.ones();
  return {std::to_string(s),     std::to_string(r),     std::to_string(3 * r),
          std::to_string(2 * s), pow3(r).str(),         pow2(s).str(),
          std::string(label(entry.cls)), entry.m.str(), entry.q.str()};
}

std::vector<Row> table3_rows(std::size_t s_min, std::size_t s_max, std::size_t cap,
                             unsigned workers) {
  std::vector<Row> rows;
  for (std::size_t s = s_min; s <= s_max; ++s) {
    auto entries = enumerate_minimal(s, cap, workers);
    std::stable_sort(entries.begin(), entries.end(),
                     [](const MinimalSequence& a, const MinimalSequence& b) {
                       return static_cast<int>(a.cls) < static_cast<int>(b.cls);
                     });
    for (const auto& e : entries) rows.push_back(table3_row(s, e));
  }
  return rows;
}

Row table4_row(const RatioRecord& record) {
  return {std::to_string(record.s), std::to_string(record.r), approx(record.lower),
          approx(record.ratio), approx(log3_of_2(record.gap.digits())),
          format_double(record.log10_gap, 15)};
}

Row cycles_row(const CycleCandidate& candidate, const Rational& alpha) {
  const std::size_t r = candidate.q.ones();
  const std::size_t s = candidate.q.length();
  return {candidate.q.str(),           std::to_string(s),
          std::to_string(r),           candidate.numerator.str(),
          candidate.denominator.str(), to_string(candidate.m1),
          to_string(cycle_upper_bound(r, s, alpha))};
}

Row bounds_row(std::size_t r, const Rational& alpha, unsigned digits) {
  const std::size_t s = unique_s_for_r(r);
  const Rational upper = cycle_upper_bound(r, s, alpha);
  const CycleLowerBound lower = cycle_lower_bound(r, s, digits);
  const double gap_bound = matveev_log10_gap_bound(s);
  // log10 of (alpha / 3) (e s)^C
  const double upper_log10 =
      Decimal(Rational(alpha / 3), digits).log10().to_double() - gap_bound;
  return {std::to_string(r),
          std::to_string(s),
          approx(Rational(pow3(r), pow2(s))),
          to_string(upper),
          approx(upper),
          approx(lower.value),
          flag(lower.meaningful),
          format_double(gap_bound, 15),
          format_double(upper_log10, 15)};
}

std::optional<Row> fig2_row(const StoppingRecord& record) {
  if (!boost::multiprecision::bit_test(record.n, 0)) return std::nullopt;
  return Row{record.n.str(), std::to_string(record.s), std::to_string(record.r),
             approx(Rational(record.r, record.s)),
             approx(Rational(pow3(record.r), pow2(record.s)))};
}

std::optional<Row> fig3_row(const StoppingRecord& record) {
  if (record.r < 2) return std::nullopt;
  const BigInt sum = weighted_sum(record.q);
  const BigInt two_s = pow2(record.s);
  const BigInt unit = sigma_lower_unit(record.r);
  return Row{record.n.str(),
             std::to_string(record.s),
             std::to_string(record.r),
             approx(Rational(pow3(record.r), two_s)),
             approx(Rational(sum, two_s)),
             approx(Rational(unit, two_s)),
             approx(Rational(sum, unit)),
             approx(Rational(record.value, record.n))};
}

}  // namespace collatz::report
