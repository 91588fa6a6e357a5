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

#ifndef COLLATZ_RESIDUE_CLASSES_HPP_
#define COLLATZ_RESIDUE_CLASSES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "collatz/numeric.hpp"
#include "collatz/parity_sequence.hpp"

namespace collatz {

enum class Mod3Class : std::uint8_t { k3i = 0, k3i1 = 1, k3i2 = 2 };

// Residue of an odd number modulo 12; the enumerator value is the residue.
enum class Mod12Class : std::uint8_t {
  k12i1 = 1,
  k12i3 = 3,
  k12i5 = 5,
  k12i7 = 7,
  k12i9 = 9,
  k12i11 = 11,
};

// "3i", "3i+1", "3i+2".
std::string_view label(Mod3Class c);
// "12i+1" ... "12i+11".
std::string_view label(Mod12Class c);
// Inverse of label(Mod12Class); nullopt for anything else.
std::optional<Mod12Class> parse_mod12(std::string_view text);

struct ClassLabel {
  Mod3Class mod3 = Mod3Class::k3i;
  std::optional<Mod12Class> mod12;  // present iff n is odd

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

ClassLabel classify(const BigInt& n);

// Mod-3 class of shortcut_step(n) as a function of n mod 6.
Mod3Class class_transition(unsigned n_mod_6);

// Two shortcut steps from n = 1 (mod 4), n > 1: (3n+1)/4. The result is
// below n and = 1 (mod 3).
BigInt two_step_reduce(const BigInt& n);

// The progression n_j = 2^s (3j + k) + m with m odd, m < 2^s, k in {0,1,2}.
class ResidueFamily {
 public:
  ResidueFamily(std::size_t s, BigInt m, unsigned k);

  std::size_t s() const noexcept { return s_; }
  const BigInt& m() const noexcept { return m_; }
  unsigned k() const noexcept { return k_; }

  BigInt member(const BigInt& j) const;

 private:
  std::size_t s_;
  BigInt m_;
  unsigned k_;
};

inline BigInt family_member(const ResidueFamily& family, const BigInt& j) {
  return family.member(j);
}

// The r with 2^(s-1) < 3^r < 2^s, if one exists (decided exactly).
std::optional<std::size_t> odd_count_for_length(std::size_t s);

struct MinimalSequence {
  BigInt m;
  ParitySequence q;
  Mod12Class cls = Mod12Class::k12i3;

  friend bool operator==(const MinimalSequence&, const MinimalSequence&) = default;
};

inline constexpr std::size_t kDefaultEnumerateCap = 24;

// All odd m < 2^s whose stopping time is exactly s, ascending in m.
// Brute force over every odd m in [3, 2^s). Throws ResourceError when
// s > cap or s > 64.
std::vector<MinimalSequence> enumerate_minimal(std::size_t s,
                                               std::size_t cap = kDefaultEnumerateCap,
                                               unsigned workers = 1);

struct Table2Row {
  std::uint64_t n = 0;
  Mod12Class cls = Mod12Class::k12i3;
  std::optional<ParitySequence> q;  // empty when longer than the cap
  BigInt value;
};

// Rows for every n <= max_n with n = 3, 7 or 11 (mod 12), ascending.
std::vector<Table2Row> table2_rows(std::uint64_t max_n, std::size_t q_cap = 15);

}  // namespace collatz

#endif  // COLLATZ_RESIDUE_CLASSES_HPP_
