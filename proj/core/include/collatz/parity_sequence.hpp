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

#ifndef COLLATZ_PARITY_SEQUENCE_HPP_
#define COLLATZ_PARITY_SEQUENCE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

// A finite word over {1, 0} recording odd (1) and even (0) shortcut steps.
// Index 0 is the first step applied; the text form is written in step
// order, so "1100" means odd, odd, even, even.
class ParitySequence {
 public:
  ParitySequence() = default;

  // Throws ParseError on empty input or any symbol other than '0'/'1'.
  static ParitySequence parse(std::string_view text);

  void push_back(bool odd);
  void pop_back();

  // s: number of steps.
  std::size_t length() const noexcept { return bits_.size(); }
  // r: number of odd steps.
  std::size_t ones() const noexcept { return ones_; }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t index) const { return bits_[index]; }
  bool back() const { return bits_.back(); }

  // 1-based positions of the odd steps, ascending.
  std::vector<std::size_t> one_positions() const;

  std::string str() const;

  ParitySequence prefix(std::size_t length) const;
  bool starts_with(const ParitySequence& other) const;

  // True for "10", "1010", "101010", ...: laps of the cycle 1 -> 2 -> 1.
  bool is_trivial_cycle_word() const;

  friend bool operator==(const ParitySequence&, const ParitySequence&) = default;

 private:
  std::vector<bool> bits_;
  std::size_t ones_ = 0;
};

inline ParitySequence parse_sequence(std::string_view text) {
  return ParitySequence::parse(text);
}

}  // namespace collatz

#endif  // COLLATZ_PARITY_SEQUENCE_HPP_
