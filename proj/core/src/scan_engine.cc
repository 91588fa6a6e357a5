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

#include "collatz/scan_engine.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "collatz/errors.hpp"
#include "collatz/sequence_algebra.hpp"

namespace collatz {

std::string_view label(ClassFilter filter) {
  switch (filter) {
    case ClassFilter::kAll:
      return "all";
    case ClassFilter::k12i3:
      return "12i+3";
    case ClassFilter::k12i7:
      return "12i+7";
    case ClassFilter::k12i11:
      return "12i+11";
  }
  return "?";
}

std::optional<ClassFilter> parse_class_filter(std::string_view text) {
  for (auto f : {ClassFilter::kAll, ClassFilter::k12i3, ClassFilter::k12i7, ClassFilter::k12i11}) {
    if (label(f) == text) return f;
  }
  return std::nullopt;
}

void ScanConfig::validate() const {
  if (start < 2) throw DomainError("scan start must be >= 2");
  if (start > end) throw DomainError("scan start must not exceed end");
  if (chunk_size < 1) throw DomainError("scan chunk_size must be >= 1");
  if (workers < 1) throw DomainError("scan workers must be >= 1");
  if (step_cap < 1) throw DomainError("scan step_cap must be >= 1");
}

std::string ScanConfig::fingerprint() const {
  return "start=" + start.str() + ";end=" + end.str() + ";class=" +
         std::string(label(class_filter)) + ";step_cap=" + std::to_string(step_cap) +
         ";alpha=" + to_string(alpha);
}

std::optional<Rational> alpha_ratio(const StoppingRecord& record) {
  if (record.r < 2) return std::nullopt;
  return Rational(weighted_sum(record.q), sigma_lower_unit(record.r));
}

void AlphaTracker::add(const StoppingRecord& record) {
  auto ratio = alpha_ratio(record);
  if (!ratio) return;
  if (!max_ || *ratio > *max_) {
    max_ = std::move(ratio);
    argmax_ = record.n;
  }
}

void AlphaTracker::merge(const AlphaTracker& later) {
  if (later.max_ && (!max_ || *later.max_ > *max_)) {
    max_ = later.max_;
    argmax_ = later.argmax_;
  }
}

AlphaMax empirical_alpha(std::span<const StoppingRecord> records) {
  AlphaTracker tracker;
  for (const auto& rec : records) tracker.add(rec);
  if (!tracker.max_ratio()) {
    throw DomainError("empirical_alpha needs at least one record with r >= 2");
  }
  return {*tracker.max_ratio(), tracker.argmax()};
}

namespace {

struct ChunkResult {
  std::vector<ScanRow> rows;
  std::uint64_t capped = 0;
  AlphaTracker alpha;
  std::vector<Violation> violations;
  std::exception_ptr error;
};

unsigned filter_residue(ClassFilter filter) {
  switch (filter) {
    case ClassFilter::k12i3:
      return 3;
    case ClassFilter::k12i7:
      return 7;
    case ClassFilter::k12i11:
      return 11;
    case ClassFilter::kAll:
      break;
  }
  return 0;
}

void scan_one(const BigInt& n, const ScanConfig& config, ChunkResult& out) {
  ScanRow row{n, std::nullopt};
  try {
    row.record = stopping_record(n, config.step_cap);
  } catch (const StepCapExceeded&) {
    ++out.capped;
  }
  if (row.record) {
    if (auto ratio = alpha_ratio(*row.record); ratio && *ratio > config.alpha) {
      out.violations.push_back({n, "alpha"});
    }
    out.alpha.add(*row.record);
  }
  out.rows.push_back(std::move(row));
}

ChunkResult process_chunk(const BigInt& first, const BigInt& last, const ScanConfig& config) {
  ChunkResult out;
  try {
    const unsigned residue = filter_residue(config.class_filter);
    BigInt n = first;
    unsigned step = 1;
    if (residue != 0) {
      const unsigned have = static_cast<unsigned>(mpz_fdiv_ui(first.backend().data(), 12));
      n += (residue + 12 - have) % 12;
      step = 12;
    }
    const auto small_n = to_u64(n);
    const auto small_last = to_u64(last);
    if (small_n && small_last && *small_last < ~std::uint64_t{0} - 12) {
      for (std::uint64_t v = *small_n; v <= *small_last; v += step) scan_one(BigInt(v), config, out);
    } else {
      for (; n <= last; n += step) scan_one(n, config, out);
    }
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

}  // namespace

ScanStats scan_range(const ScanConfig& config, RecordSink& sink, std::stop_token stop) {
  config.validate();
  ScanStats stats;
  BigInt origin = config.start;

  if (config.checkpoint_path) {
    const auto& path = *config.checkpoint_path;
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
      ResumePoint resume = checkpoint_resume(path, config);
      std::filesystem::resize_file(path, resume.ledger_bytes, ec);
      if (ec) throw PersistenceError("cannot trim checkpoint " + path.string() + ": " + ec.message());
      sink.rewind(resume.sink_position);
      stats = std::move(resume.stats);
      if (resume.complete) return stats;
      origin = resume.remainder.start;
    } else {
      checkpoint_create(path, config);
      sink.rewind(0);
    }
  }
  AlphaTracker alpha(stats.max_alpha_ratio, stats.argmax_n);

  const BigInt span_chunks = (config.end - origin) / config.chunk_size + 1;
  const auto total = to_u64(span_chunks);
  if (!total) throw ResourceError("scan range has too many chunks");

  auto chunk_first = [&](std::uint64_t index) {
    return origin + BigInt(index) * config.chunk_size;
  };
  auto chunk_last = [&](std::uint64_t index) {
    BigInt last = chunk_first(index) + (config.chunk_size - 1);
    return last > config.end ? config.end : last;
  };

  auto emit = [&](std::uint64_t index, ChunkResult&& chunk) {
    if (chunk.error) std::rethrow_exception(chunk.error);
    for (const auto& row : chunk.rows) sink.write(row);
    stats.count += chunk.rows.size();
    stats.capped += chunk.capped;
    alpha.merge(chunk.alpha);
    stats.max_alpha_ratio = alpha.max_ratio();
    stats.argmax_n = alpha.argmax();
    stats.violations.insert(stats.violations.end(), chunk.violations.begin(),
                            chunk.violations.end());
    const std::uint64_t position = sink.commit();
    if (config.checkpoint_path) {
      ChunkEntry entry;
      entry.first = chunk_first(index);
      entry.last = chunk_last(index);
      entry.rows = chunk.rows.size();
      entry.capped = chunk.capped;
      entry.max_ratio = stats.max_alpha_ratio;
      entry.argmax = stats.argmax_n;
      entry.violations = std::move(chunk.violations);
      entry.sink_position = position;
      checkpoint_save(*config.checkpoint_path, entry);
    }
  };

  if (config.workers == 1) {
    for (std::uint64_t i = 0; i < *total; ++i) {
      emit(i, process_chunk(chunk_first(i), chunk_last(i), config));
      if (stop.stop_requested()) break;
    }
    return stats;
  }

  // Workers claim chunk indices in order and park results until the
  // emitting thread consumes them; at most `window` chunks run ahead.
  struct Shared {
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::uint64_t, ChunkResult> done;
    std::uint64_t next = 0;
    std::uint64_t emitted = 0;
    bool cancel = false;
  } shared;
  const std::uint64_t window = 4ull * config.workers;

  std::vector<std::jthread> threads;
  threads.reserve(config.workers);
  struct CancelOnExit {
    Shared& shared;
    std::vector<std::jthread>& threads;
    ~CancelOnExit() {
      {
        std::lock_guard lock(shared.mu);
        shared.cancel = true;
      }
      shared.cv.notify_all();
      threads.clear();
    }
  } guard{shared, threads};

  for (unsigned w = 0; w < config.workers; ++w) {
    threads.emplace_back([&] {
      for (;;) {
        std::uint64_t index;
        {
          std::unique_lock lock(shared.mu);
          shared.cv.wait(lock, [&] {
            return shared.cancel || shared.next >= *total ||
                   shared.next < shared.emitted + window;
          });
          if (shared.cancel || shared.next >= *total) return;
          index = shared.next++;
        }
        ChunkResult result = process_chunk(chunk_first(index), chunk_last(index), config);
        {
          std::lock_guard lock(shared.mu);
          shared.done.emplace(index, std::move(result));
        }
        shared.cv.notify_all();
      }
    });
  }

  for (std::uint64_t i = 0; i < *total; ++i) {
    ChunkResult chunk;
    {
      std::unique_lock lock(shared.mu);
      shared.cv.wait(lock, [&] { return shared.done.contains(i); });
      auto node = shared.done.extract(i);
      chunk = std::move(node.mapped());
      ++shared.emitted;
    }
    shared.cv.notify_all();
    emit(i, std::move(chunk));
    if (stop.stop_requested()) break;
  }
  return stats;
}

}  // namespace collatz
