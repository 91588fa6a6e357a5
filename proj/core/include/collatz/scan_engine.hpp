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

#ifndef COLLATZ_SCAN_ENGINE_HPP_
#define COLLATZ_SCAN_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "collatz/bounds_cycles.hpp"
#include "collatz/core_process.hpp"
#include "collatz/numeric.hpp"

namespace collatz {

inline constexpr std::size_t kDefaultScanStepCap = 100'000;

enum class ClassFilter { kAll, k12i3, k12i7, k12i11 };

std::string_view label(ClassFilter filter);  // "all", "12i+3", ...
std::optional<ClassFilter> parse_class_filter(std::string_view text);

struct ScanConfig {
  BigInt start = 2;
  BigInt end = 2;
  ClassFilter class_filter = ClassFilter::kAll;
  std::size_t step_cap = kDefaultScanStepCap;
  unsigned workers = 1;
  std::optional<std::filesystem::path> checkpoint_path;
  std::size_t chunk_size = 1000;
  Rational alpha = kDefaultAlpha;

  // Throws DomainError unless 2 <= start <= end, chunk_size >= 1, workers >= 1.
  void validate() const;

  // Canonical text of the fields that determine the output. Worker count,
  // chunk size and checkpoint location are excluded.
  std::string fingerprint() const;
};

// One scanned start value. `record` is empty when the step cap was hit.
struct ScanRow {
  BigInt n;
  std::optional<StoppingRecord> record;

  bool capped() const noexcept { return !record.has_value(); }
};

struct Violation {
  BigInt n;
  std::string constraint;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ScanStats {
  std::uint64_t count = 0;   // rows emitted, capped ones included
  std::uint64_t capped = 0;
  std::optional<Rational> max_alpha_ratio;
  BigInt argmax_n = 0;
  // Records whose alpha ratio exceeds the configured alpha.
  std::vector<Violation> violations;

  friend bool operator==(const ScanStats&, const ScanStats&) = default;
};

// Sigma / (3^(r-1) - 2^(r-1)), i.e. sigma_q over its lower-bound unit.
// nullopt when the unit is zero (r <= 1).
std::optional<Rational> alpha_ratio(const StoppingRecord& record);

// Running maximum of alpha_ratio; ties keep the earliest record.
class AlphaTracker {
 public:
  AlphaTracker() = default;
  AlphaTracker(std::optional<Rational> max_ratio, BigInt argmax)
      : max_(std::move(max_ratio)), argmax_(std::move(argmax)) {}

  void add(const StoppingRecord& record);
  void merge(const AlphaTracker& later);

  const std::optional<Rational>& max_ratio() const noexcept { return max_; }
  const BigInt& argmax() const noexcept { return argmax_; }

 private:
  std::optional<Rational> max_;
  BigInt argmax_ = 0;
};

struct AlphaMax {
  Rational max_ratio;
  BigInt argmax;
};

// Maximum alpha ratio over records with r >= 2. DomainError when none qualify.
AlphaMax empirical_alpha(std::span<const StoppingRecord> records);

// Consumer of scan rows, always called from the thread that runs
// scan_range, in ascending n.
class RecordSink {
 public:
  virtual ~RecordSink() = default;
  virtual void write(const ScanRow& row) = 0;
  // Flushes everything written so far and returns a position that rewind()
  // accepts. Called once per completed chunk.
  virtual std::uint64_t commit() { return 0; }
  // Discards everything written after `position`.
  virtual void rewind(std::uint64_t /*position*/) {}
};

class VectorSink : public RecordSink {
 public:
  void write(const ScanRow& row) override { rows.push_back(row); }
  std::uint64_t commit() override { return rows.size(); }
  void rewind(std::uint64_t position) override { rows.resize(position); }

  std::vector<ScanRow> rows;
};

// Scans every in-filter n in [start, end]. Rows reach the sink in ascending
// n whatever the worker count. With a checkpoint path, an existing ledger is
// resumed (the sink is rewound to the last committed position) and a new one
// is created otherwise. A stop request is honoured at the next chunk
// boundary; the returned stats then cover the rows emitted so far.
ScanStats scan_range(const ScanConfig& config, RecordSink& sink, std::stop_token stop = {});

// Chunk ledger persistence.
//
// Format (text, one record per line):
//   collatz-scan-checkpoint v1
//   config <fnv1a-64 hex> <fingerprint>
//   violation <n> <constraint>                       (zero or more)
//   chunk <first> <last> <rows> <capped> <max_ratio|-> <argmax> <sink_pos>
// Violation lines belong to the chunk line that follows them.
struct ChunkEntry {
  BigInt first;
  BigInt last;
  std::uint64_t rows = 0;
  std::uint64_t capped = 0;
  std::optional<Rational> max_ratio;  // running, after this chunk
  BigInt argmax = 0;                  // running, after this chunk
  std::vector<Violation> violations;  // found inside this chunk
  std::uint64_t sink_position = 0;
};

struct ResumePoint {
  ScanConfig remainder;  // start moved past the last completed chunk
  ScanStats stats;       // accumulated over completed chunks
  std::uint64_t sink_position = 0;
  std::uint64_t ledger_bytes = 0;  // length of the intact prefix of the file
  bool complete = false;  // every chunk of the range is done
};

// Writes a fresh ledger (header and config line), replacing any file.
void checkpoint_create(const std::filesystem::path& path, const ScanConfig& config);
// Appends one completed chunk.
void checkpoint_save(const std::filesystem::path& path, const ChunkEntry& entry);
// Reads a ledger written for `config`. Throws PersistenceError when the file
// is missing, corrupt, from another format version, or written for a
// different configuration.
ResumePoint checkpoint_resume(const std::filesystem::path& path, const ScanConfig& config);

}  // namespace collatz

#endif  // COLLATZ_SCAN_ENGINE_HPP_
