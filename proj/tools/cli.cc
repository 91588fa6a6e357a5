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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "collatz/bounds_cycles.hpp"
#include "collatz/core_process.hpp"
#include "collatz/decimal.hpp"
#include "collatz/errors.hpp"
#include "collatz/reports.hpp"
#include "collatz/residue_classes.hpp"
#include "collatz/scan_engine.hpp"
#include "collatz/sequence_algebra.hpp"

namespace collatz::cli {
namespace {

using report::Format;
using report::ReportKind;
using report::Row;

// Options shared by every report-producing subcommand.
struct Output {
  std::string path;
  bool json = false;

  void attach(CLI::App& app) {
    app.add_option("--out,-o", path, "Write the report to this file instead of stdout");
    app.add_flag("--json", json, "Emit JSON Lines instead of CSV");
  }
  Format format() const { return json ? Format::kJsonLines : Format::kCsv; }
};

// Opens --out (or falls back to the given stream) and writes rows.
class ReportOutput {
 public:
  ReportOutput(const Output& options, std::ostream& fallback, ReportKind kind) {
    std::ostream* stream = &fallback;
    if (!options.path.empty()) {
      file_.open(options.path, std::ios::binary | std::ios::trunc);
      if (!file_) throw PersistenceError("cannot open " + options.path + " for writing");
      stream = &file_;
    }
    stream_ = stream;
    writer_ = report::make_writer(options.format(), *stream, report::schema(kind));
  }

  void write(const Row& row) { writer_->write(row); }

  void finish() {
    stream_->flush();
    if (!*stream_) throw PersistenceError("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
  std::unique_ptr<report::RowWriter> writer_;
};

// Scan rows streamed to a report file, with byte positions usable as
// checkpoint resume points.
class FileReportSink : public RecordSink {
 public:
  using Mapper = std::function<std::optional<Row>(const ScanRow&)>;

  FileReportSink(std::filesystem::path path, Format format, ReportKind kind, Mapper mapper)
      : path_(std::move(path)), format_(format), kind_(kind), mapper_(std::move(mapper)) {}

  void write(const ScanRow& row) override {
    if (!writer_) rewind(0);
    if (auto mapped = mapper_(row)) writer_->write(*mapped);
  }

  std::uint64_t commit() override {
    if (!writer_) rewind(0);
    file_.flush();
    if (!file_) throw PersistenceError("write to " + path_.string() + " failed");
    return static_cast<std::uint64_t>(file_.tellp());
  }

  void rewind(std::uint64_t position) override {
    writer_.reset();
    if (file_.is_open()) file_.close();
    if (position == 0) {
      file_.open(path_, std::ios::binary | std::ios::trunc);
      if (!file_) throw PersistenceError("cannot open " + path_.string() + " for writing");
      writer_ = report::make_writer(format_, file_, report::schema(kind_));
      return;
    }
    std::error_code ec;
    const auto size = std::filesystem::file_size(path_, ec);
    if (ec || size < position) {
      throw PersistenceError("output " + path_.string() +
                             " is shorter than the checkpoint expects; delete the checkpoint "
                             "to restart the scan");
    }
    std::filesystem::resize_file(path_, position, ec);
    if (ec) throw PersistenceError("cannot trim " + path_.string() + ": " + ec.message());
    file_.open(path_, std::ios::binary | std::ios::app);
    if (!file_) throw PersistenceError("cannot reopen " + path_.string());
    file_.seekp(0, std::ios::end);
    writer_ = report::make_writer(format_, file_, report::schema(kind_), false);
  }

 private:
  std::filesystem::path path_;
  Format format_;
  ReportKind kind_;
  Mapper mapper_;
  std::ofstream file_;
  std::unique_ptr<report::RowWriter> writer_;
};

// Same as FileReportSink but for a plain stream; cannot resume.
class StreamReportSink : public RecordSink {
 public:
  StreamReportSink(std::ostream& out, Format format, ReportKind kind,
                   FileReportSink::Mapper mapper)
      : out_(out), writer_(report::make_writer(format, out, report::schema(kind))),
        mapper_(std::move(mapper)) {}

  void write(const ScanRow& row) override {
    if (auto mapped = mapper_(row)) writer_->write(*mapped);
  }
  std::uint64_t commit() override {
    out_.flush();
    return 0;
  }

 private:
  std::ostream& out_;
  std::unique_ptr<report::RowWriter> writer_;
  FileReportSink::Mapper mapper_;
};

BigInt natural_arg(const std::string& text) { return parse_natural(text); }

struct ScanArgs {
  std::string start;
  std::string end;
  std::string cls;
  unsigned workers = 1;
  std::string checkpoint;
  std::size_t chunk_size = 1000;
  std::size_t step_cap = kDefaultScanStepCap;
  std::string alpha = "40";

  void attach(CLI::App& app) {
    app.add_option("--start", start, "First start value")->capture_default_str();
    app.add_option("--end", end, "Last start value")->capture_default_str();
    app.add_option("--class", cls, "Class filter: all, 12i+3, 12i+7 or 12i+11")
        ->capture_default_str();
    app.add_option("--workers,-w", workers, "Worker threads")->capture_default_str();
    app.add_option("--checkpoint", checkpoint, "Checkpoint ledger (created or resumed)");
    app.add_option("--chunk-size", chunk_size, "Start values per chunk")->capture_default_str();
    app.add_option("--step-cap", step_cap, "Shortcut steps allowed per start value")
        ->capture_default_str();
    app.add_option("--alpha", alpha, "Envelope factor checked against each record")
        ->capture_default_str();
  }

  ScanConfig config() const {
    ScanConfig cfg;
    cfg.start = natural_arg(start);
    cfg.end = natural_arg(end);
    const auto filter = parse_class_filter(cls);
    if (!filter) throw ParseError("unknown class filter '" + cls + "'");
    cfg.class_filter = *filter;
    cfg.workers = workers;
    cfg.chunk_size = chunk_size;
    cfg.step_cap = step_cap;
    cfg.alpha = parse_rational(alpha);
    if (!checkpoint.empty()) cfg.checkpoint_path = checkpoint;
    return cfg;
  }
};

void print_stats(std::ostream& err, const ScanStats& stats) {
  err << "rows=" << stats.count << " capped=" << stats.capped;
  if (stats.max_alpha_ratio) {
    err << " max_alpha_ratio=" << report::approx(*stats.max_alpha_ratio)
        << " argmax_n=" << stats.argmax_n.str();
  }
  err << " alpha_violations=" << stats.violations.size() << '\n';
  for (const auto& v : stats.violations) {
    err << "violation n=" << v.n.str() << " constraint=" << v.constraint << '\n';
  }
}

int run_scan(const ScanArgs& args, const Output& output, ReportKind kind,
             FileReportSink::Mapper mapper, std::ostream& out, std::ostream& err) {
  const ScanConfig cfg = args.config();
  ScanStats stats;
  if (!output.path.empty()) {
    FileReportSink sink(output.path, output.format(), kind, std::move(mapper));
    stats = scan_range(cfg, sink);
    sink.commit();
  } else {
    if (cfg.checkpoint_path) throw ParseError("--checkpoint requires --out");
    StreamReportSink sink(out, output.format(), kind, std::move(mapper));
    stats = scan_range(cfg, sink);
  }
  print_stats(err, stats);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortcut Collatz stopping times, residue classes, cycle bounds and ratio records"};
  app.name("collatz");
  app.require_subcommand(1);

  unsigned digits = default_digits();
  app.add_option("--digits", digits, "Significant digits for high-precision decimals")
      ->capture_default_str();

  std::function<int()> action;

  // stop
  Output stop_out;
  std::string stop_n;
  std::size_t stop_cap = kDefaultStepCap;
  auto* stop = app.add_subcommand("stop", "Stopping record of one start value");
  stop->add_option("n", stop_n, "Start value (>= 2)")->required();
  stop->add_option("--cap", stop_cap, "Step cap")->capture_default_str();
  stop_out.attach(*stop);
  stop->callback([&] {
    action = [&] {
      const auto row = report::stop_row(stopping_record(natural_arg(stop_n), stop_cap));
      ReportOutput o(stop_out, out, ReportKind::kStop);
      o.write(row);
      o.finish();
      return kExitOk;
    };
  });

  // traj
  Output traj_out;
  std::string traj_n;
  std::size_t traj_limit = 1000;
  auto* traj = app.add_subcommand("traj", "Orbit of a start value until it reaches 1");
  traj->add_option("n", traj_n, "Start value (>= 1)")->required();
  traj->add_option("--limit", traj_limit, "Maximum number of steps")->capture_default_str();
  traj_out.attach(*traj);
  traj->callback([&] {
    action = [&] {
      const auto rows = report::traj_rows(natural_arg(traj_n), traj_limit);
      ReportOutput o(traj_out, out, ReportKind::kTraj);
      for (const auto& row : rows.rows) o.write(row);
      o.finish();
      if (rows.truncated) err << "trajectory truncated at " << traj_limit << " steps\n";
      return kExitOk;
    };
  });

  // seq
  Output seq_out;
  std::string seq_q;
  std::string seq_n;
  auto* seq = app.add_subcommand("seq", "Evaluate the closed form of a parity sequence");
  seq->add_option("q", seq_q, "Parity word such as 1100")->required();
  seq->add_option("--apply", seq_n, "Start value the word is applied to")->required();
  seq_out.attach(*seq);
  seq->callback([&] {
    action = [&] {
      const auto row = report::seq_row(parse_sequence(seq_q), natural_arg(seq_n));
      ReportOutput o(seq_out, out, ReportKind::kSeq);
      o.write(row);
      o.finish();
      return kExitOk;
    };
  });

  // table1
  Output t1_out;
  std::uint64_t t1_rows = 41;
  auto* t1 = app.add_subcommand("table1", "Integers by residue class, i = 0 .. rows-1");
  t1->add_option("--rows", t1_rows, "Number of rows")->capture_default_str();
  t1_out.attach(*t1);
  t1->callback([&] {
    action = [&] {
      ReportOutput o(t1_out, out, ReportKind::kTable1);
      for (std::uint64_t i = 0; i < t1_rows; ++i) o.write(report::table1_row(i));
      o.finish();
      return kExitOk;
    };
  });

  // table2
  Output t2_out;
  std::uint64_t t2_max = 467;
  std::size_t t2_cap = 15;
  auto* t2 = app.add_subcommand("table2", "Stopping sequences of n = 3, 7, 11 (mod 12)");
  t2->add_option("--max-n", t2_max, "Largest start value")->capture_default_str();
  t2->add_option("--q-cap", t2_cap, "Longest sequence printed; longer ones are left blank")
      ->capture_default_str();
  t2_out.attach(*t2);
  t2->callback([&] {
    action = [&] {
      ReportOutput o(t2_out, out, ReportKind::kTable2);
      for (const auto& row : table2_rows(t2_max, t2_cap)) o.write(report::table2_row(row));
      o.finish();
      return kExitOk;
    };
  });

  // table3
  Output t3_out;
  std::size_t t3_min = 4;
  std::size_t t3_max = 13;
  std::size_t t3_cap = kDefaultEnumerateCap;
  unsigned t3_workers = 1;
  auto* t3 = app.add_subcommand("table3", "Minimal stopping sequences of each length");
  t3->add_option("--s-min", t3_min, "Shortest length")->capture_default_str();
  t3->add_option("--s-max", t3_max, "Longest length")->capture_default_str();
  t3->add_option("--cap", t3_cap, "Largest length allowed")->capture_default_str();
  t3->add_option("--workers,-w", t3_workers, "Worker threads")->capture_default_str();
  t3_out.attach(*t3);
  t3->callback([&] {
    action = [&] {
      if (t3_min < 1 || t3_min > t3_max) throw ParseError("need 1 <= s-min <= s-max");
      ReportOutput o(t3_out, out, ReportKind::kTable3);
      for (const auto& row : report::table3_rows(t3_min, t3_max, t3_cap, t3_workers)) o.write(row);
      o.finish();
      return kExitOk;
    };
  });

  // table4
  Output t4_out;
  std::size_t t4_min = 485;
  std::size_t t4_max = 302000;
  std::optional<unsigned> t4_digits;
  auto* t4 = app.add_subcommand("table4", "Record approximations r/s of log3(2)");
  t4->add_option("--s-min", t4_min, "First s scanned")->capture_default_str();
  t4->add_option("--s-max", t4_max, "Last s scanned")->capture_default_str();
  t4->add_option("--digits", t4_digits, "Significant digits (overrides the global setting)");
  t4_out.attach(*t4);
  t4->callback([&] {
    action = [&] {
      ReportOutput o(t4_out, out, ReportKind::kTable4);
      for (const auto& rec : ratio_records(t4_min, t4_max, t4_digits.value_or(digits))) {
        o.write(report::table4_row(rec));
      }
      o.finish();
      return kExitOk;
    };
  });

  // cycles
  Output cy_out;
  std::size_t cy_max = 16;
  std::size_t cy_cap = kDefaultCycleCap;
  std::string cy_alpha = "40";
  auto* cy = app.add_subcommand("cycles", "Integer cycle numbers among all short words");
  cy->add_option("--s-max", cy_max, "Longest word")->capture_default_str();
  cy->add_option("--cap", cy_cap, "Largest s-max allowed")->capture_default_str();
  cy->add_option("--alpha", cy_alpha, "Envelope factor for the upper bound")->capture_default_str();
  cy_out.attach(*cy);
  cy->callback([&] {
    action = [&] {
      const Rational alpha = parse_rational(cy_alpha);
      ReportOutput o(cy_out, out, ReportKind::kCycles);
      for (const auto& c : enumerate_cycle_candidates(cy_max, cy_cap)) {
        o.write(report::cycles_row(c, alpha));
      }
      o.finish();
      return kExitOk;
    };
  });

  // bounds
  Output bd_out;
  std::optional<std::size_t> bd_r;
  std::optional<std::size_t> bd_r_max;
  std::string bd_alpha = "40";
  auto* bd = app.add_subcommand("bounds", "Cycle-number bounds for r odd steps");
  auto* bd_r_opt = bd->add_option("--r", bd_r, "Odd-step count (single row)");
  auto* bd_rmax_opt = bd->add_option("--r-max", bd_r_max, "Emit rows for r = 1 .. r-max");
  bd_r_opt->excludes(bd_rmax_opt);
  bd->add_option("--alpha", bd_alpha, "Envelope factor")->capture_default_str();
  bd_out.attach(*bd);
  bd->callback([&] {
    action = [&] {
      if (!bd_r && !bd_r_max) throw ParseError("bounds needs --r or --r-max");
      const Rational alpha = parse_rational(bd_alpha);
      const std::size_t first = bd_r ? *bd_r : 1;
      const std::size_t last = bd_r ? *bd_r : *bd_r_max;
      if (first < 1) throw ParseError("r must be >= 1");
      ReportOutput o(bd_out, out, ReportKind::kBounds);
      for (std::size_t r = first; r <= last; ++r) o.write(report::bounds_row(r, alpha, digits));
      o.finish();
      return kExitOk;
    };
  });

  // scan
  Output sc_out;
  ScanArgs sc_args;
  sc_args.start = "2";
  sc_args.end = "100000";
  sc_args.cls = "all";
  auto* sc = app.add_subcommand("scan", "Stopping records over a range of start values");
  sc_args.attach(*sc);
  sc_out.attach(*sc);
  sc->callback([&] {
    action = [&] {
      return run_scan(sc_args, sc_out, ReportKind::kScan,
                      [](const ScanRow& row) { return std::optional<Row>(report::scan_row(row)); },
                      out, err);
    };
  });

  // fig2
  Output f2_out;
  ScanArgs f2_args;
  f2_args.start = "3";
  f2_args.end = "1000000";
  f2_args.cls = "all";
  auto* f2 = app.add_subcommand("fig2", "Odd-step ratios r/s and 3^r/2^s of odd starters");
  f2_args.attach(*f2);
  f2_out.attach(*f2);
  f2->callback([&] {
    action = [&] {
      return run_scan(f2_args, f2_out, ReportKind::kFig2,
                      [](const ScanRow& row) -> std::optional<Row> {
                        if (!row.record) return std::nullopt;
                        return report::fig2_row(*row.record);
                      },
                      out, err);
    };
  });

  // fig3
  Output f3_out;
  ScanArgs f3_args;
  f3_args.start = "7";
  f3_args.end = "2400007";
  f3_args.cls = "12i+7";
  auto* f3 = app.add_subcommand("fig3", "sigma_q, its bounds and F/m over a class scan");
  f3_args.attach(*f3);
  f3_out.attach(*f3);
  f3->callback([&] {
    action = [&] {
      return run_scan(f3_args, f3_out, ReportKind::kFig3,
                      [](const ScanRow& row) -> std::optional<Row> {
                        if (!row.record) return std::nullopt;
                        return report::fig3_row(*row.record);
                      },
                      out, err);
    };
  });

  // verify
  std::string vf_path;
  std::size_t vf_q_cap = 15;
  std::string vf_alpha = "40";
  std::size_t vf_step_cap = kDefaultScanStepCap;
  auto* vf = app.add_subcommand("verify", "Re-derive every row of a CSV produced by this tool");
  vf->add_option("file", vf_path, "CSV file")->required();
  vf->add_option("--q-cap", vf_q_cap, "q-cap the table2 file was made with")->capture_default_str();
  vf->add_option("--alpha", vf_alpha, "alpha the file was made with")->capture_default_str();
  vf->add_option("--step-cap", vf_step_cap, "Step cap for scan files")->capture_default_str();
  vf->callback([&] {
    action = [&] {
      std::ifstream in(vf_path, std::ios::binary);
      if (!in) throw PersistenceError("cannot open " + vf_path);
      report::VerifyOptions options;
      options.q_cap = vf_q_cap;
      options.alpha = parse_rational(vf_alpha);
      options.digits = digits;
      options.step_cap = vf_step_cap;
      const auto result = report::verify_csv(in, options);
      if (result.kind) {
        out << "kind=" << report::schema(*result.kind).name << " rows=" << result.rows_checked
            << " mismatches=" << result.mismatch_count << '\n';
      }
      for (const auto& m : result.mismatches) err << m << '\n';
      return result.ok() ? kExitOk : kExitDomain;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PersistenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPersistence;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitPersistence;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitPersistence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace collatz::cli
