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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "collatz/errors.hpp"
#include "collatz/scan_engine.hpp"

namespace collatz {
namespace {

constexpr std::string_view kHeader = "collatz-scan-checkpoint v1";

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string config_line(const ScanConfig& config) {
  const std::string fp = config.fingerprint();
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(fnv1a(fp)));
  return "config " + std::string(hex) + " " + fp;
}

[[noreturn]] void corrupt(const std::filesystem::path& path, std::size_t line,
                          const std::string& why) {
  throw PersistenceError("checkpoint " + path.string() + " line " + std::to_string(line) +
                         ": " + why +
                         "; delete the checkpoint and its output file to restart the scan");
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> fields;
  for (std::string f; in >> f;) fields.push_back(f);
  return fields;
}

std::uint64_t parse_u64(const std::string& text) {
  const BigInt value = parse_natural(text);
  const auto small = to_u64(value);
  if (!small) throw ParseError("value out of range: " + text);
  return *small;
}

}  // namespace

void checkpoint_create(const std::filesystem::path& path, const ScanConfig& config) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw PersistenceError("cannot create checkpoint " + path.string());
  out << kHeader << '\n' << config_line(config) << '\n';
  out.flush();
  if (!out) throw PersistenceError("cannot write checkpoint " + path.string());
}

void checkpoint_save(const std::filesystem::path& path, const ChunkEntry& entry) {
  std::ostringstream text;
  for (const auto& v : entry.violations) {
    text << "violation " << v.n.str() << ' ' << v.constraint << '\n';
  }
  text << "chunk " << entry.first.str() << ' ' << entry.last.str() << ' ' << entry.rows << ' '
       << entry.capped << ' ' << (entry.max_ratio ? to_string(*entry.max_ratio) : "-") << ' '
       << entry.argmax.str() << ' ' << entry.sink_position << '\n';
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw PersistenceError("cannot open checkpoint " + path.string() + " for append");
  out << text.str();
  out.flush();
  if (!out) throw PersistenceError("cannot append to checkpoint " + path.string());
}

ResumePoint checkpoint_resume(const std::filesystem::path& path, const ScanConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PersistenceError("checkpoint " + path.string() +
                           " is missing or unreadable; start the scan without it");
  }
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  ResumePoint resume;
  resume.remainder = config;
  BigInt expected_first = config.start;
  std::vector<Violation> pending;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  bool saw_config = false;

  while (offset < content.size()) {
    const std::size_t newline = content.find('\n', offset);
    if (newline == std::string::npos) break;  // torn final line: never committed
    const std::string line = content.substr(offset, newline - offset);
    ++line_no;
    if (line_no == 1) {
      if (line != kHeader) corrupt(path, line_no, "unknown format header '" + line + "'");
    } else if (line_no == 2) {
      if (line.rfind("config ", 0) != 0) corrupt(path, line_no, "missing config line");
      if (line != config_line(config)) {
        corrupt(path, line_no, "written for a different scan configuration (" +
                                   line.substr(7) + ")");
      }
      saw_config = true;
      resume.ledger_bytes = newline + 1;
    } else {
      const auto fields = split(line);
      try {
        if (!fields.empty() && fields[0] == "violation" && fields.size() == 3) {
          pending.push_back({parse_natural(fields[1]), fields[2]});
        } else if (!fields.empty() && fields[0] == "chunk" && fields.size() == 8) {
          ChunkEntry entry;
          entry.first = parse_natural(fields[1]);
          entry.last = parse_natural(fields[2]);
          entry.rows = parse_u64(fields[3]);
          entry.capped = parse_u64(fields[4]);
          if (fields[5] != "-") entry.max_ratio = parse_rational(fields[5]);
          entry.argmax = parse_natural(fields[6]);
          entry.sink_position = parse_u64(fields[7]);
          if (entry.first != expected_first || entry.last < entry.first || entry.last > config.end) {
            corrupt(path, line_no, "chunk boundaries do not continue the ledger");
          }
          expected_first = entry.last + 1;
          resume.stats.count += entry.rows;
          resume.stats.capped += entry.capped;
          resume.stats.max_alpha_ratio = entry.max_ratio;
          resume.stats.argmax_n = entry.argmax;
          for (auto& v : pending) resume.stats.violations.push_back(std::move(v));
          pending.clear();
          resume.sink_position = entry.sink_position;
          resume.ledger_bytes = newline + 1;
        } else {
          corrupt(path, line_no, "unrecognised ledger line '" + line + "'");
        }
      } catch (const ParseError& e) {
        corrupt(path, line_no, e.what());
      }
    }
    offset = newline + 1;
  }
  if (!saw_config) corrupt(path, line_no, "truncated before the config line");

  resume.remainder.start = expected_first;
  resume.complete = expected_first > config.end;
  return resume;
}

}  // namespace collatz
