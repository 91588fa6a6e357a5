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

#include "collatz/parity_sequence.hpp"

#include <algorithm>

#include "collatz/errors.hpp"

namespace collatz {

ParitySequence ParitySequence::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty parity sequence");
  ParitySequence q;
  q.bits_.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError("parity sequence '" + std::string(text) + "' has symbol '" +
                       std::string(1, c) + "' at position " + std::to_string(i + 1));
    }
    q.push_back(c == '1');
  }
  return q;
}

void ParitySequence::push_back(bool odd) {
  bits_.push_back(odd);
  if (odd) ++ones_;
}

void ParitySequence::pop_back() {
  if (bits_.back()) --ones_;
  bits_.pop_back();
}

std::vector<std::size_t> ParitySequence::one_positions() const {
  std::vector<std::size_t> positions;
  positions.reserve(ones_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) positions.push_back(i + 1);
  }
  return positions;
}

std::string ParitySequence::str() const {
  std::string text(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) text[i] = '1';
  }
  return text;
}

ParitySequence ParitySequence::prefix(std::size_t length) const {
  ParitySequence result;
  const std::size_t n = std::min(length, bits_.size());
  for (std::size_t i = 0; i < n; ++i) result.push_back(bits_[i]);
  return result;
}

bool ParitySequence::starts_with(const ParitySequence& other) const {
  if (other.length() > length()) return false;
  return std::equal(other.bits_.begin(), other.bits_.end(), bits_.begin());
}

bool ParitySequence::is_trivial_cycle_word() const {
  if (bits_.empty() || bits_.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] != (i % 2 == 0)) return false;
  }
  return true;
}

}  // namespace collatz
