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

#include "collatz/residue_classes.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "collatz/core_process.hpp"
#include "collatz/errors.hpp"

namespace collatz {

std::string_view label(Mod3Class c) {
  switch (c) {
    case Mod3Class::k3i:
      return "3i";
    case Mod3Class::k3i1:
      return "3i+1";
    case Mod3Class::k3i2:
      return "3i+2";
  }
  return "?";
}

std::string_view label(Mod12Class c) {
  switch (c) {
    case Mod12Class::k12i1:
      return "12i+1";
    case Mod12Class::k12i3:
      return "12i+3";
    case Mod12Class::k12i5:
      return "12i+5";
    case Mod12Class::k12i7:
      return "12i+7";
    case Mod12Class::k12i9:
      return "12i+9";
    case Mod12Class::k12i11:
      return "12i+11";
  }
  return "?";
}

std::optional<Mod12Class> parse_mod12(std::string_view text) {
  for (auto c : {Mod12Class::k12i1, Mod12Class::k12i3, Mod12Class::k12i5,
                 Mod12Class::k12i7, Mod12Class::k12i9, Mod12Class::k12i11}) {
    if (label(c) == text) return c;
  }
  return std::nullopt;
}

namespace {

unsigned residue(const BigInt& n, unsigned modulus) {
  return static_cast<unsigned>(mpz_fdiv_ui(n.backend().data(), modulus));
}

}  // namespace

ClassLabel classify(const BigInt& n) {
  if (n < 1) throw DomainError("classify requires n >= 1");
  ClassLabel out;
  out.mod3 = static_cast<Mod3Class>(residue(n, 3));
  const unsigned r12 = residue(n, 12);
  if (r12 % 2 == 1) out.mod12 = static_cast<Mod12Class>(r12);
  return out;
}

Mod3Class class_transition(unsigned n_mod_6) {
  // Even n = 6t + e maps to 3t + e/2; odd n maps to (3n+1)/2 = 2 (mod 3).
  static constexpr std::array<Mod3Class, 6> kNext = {
      Mod3Class::k3i, Mod3Class::k3i2, Mod3Class::k3i1,
      Mod3Class::k3i2, Mod3Class::k3i2, Mod3Class::k3i2};
  if (n_mod_6 > 5) throw DomainError("class_transition expects a residue in [0, 5]");
  return kNext[n_mod_6];
}

BigInt two_step_reduce(const BigInt& n) {
  if (n <= 1 || residue(n, 4) != 1) {
    throw DomainError("two_step_reduce requires n = 1 (mod 4) and n > 1 (got " + n.str() + ")");
  }
  return (3 * n + 1) >> 2;
}

ResidueFamily::ResidueFamily(std::size_t s, BigInt m, unsigned k)
    : s_(s), m_(std::move(m)), k_(k) {
  if (k_ > 2) throw DomainError("residue family k must be 0, 1 or 2");
  if (m_ < 1 || !boost::multiprecision::bit_test(m_, 0)) {
    throw DomainError("residue family m must be odd and positive");
  }
  if (m_ >= pow2(s_)) throw DomainError("residue family m must be below 2^s");
}

BigInt ResidueFamily::member(const BigInt& j) const {
  if (j < 0) throw DomainError("residue family index j must be >= 0");
  return pow2(s_) * (3 * j + k_) + m_;
}

std::optional<std::size_t> odd_count_for_length(std::size_t s) {
  if (s == 0) return std::nullopt;
  const BigInt upper = pow2(s);
  const BigInt lower = pow2(s - 1);
  // 3^r < 2^s has at most one r with 3^r > 2^(s-1) since 3 > 2.
  std::size_t r = 0;
  BigInt power = 1;
  while (power * 3 < upper) {
    power *= 3;
    ++r;
  }
  if (power > lower) return r;
  return std::nullopt;
}

namespace {

// Parity word of m if its stopping time is exactly s, else nullopt.
std::optional<ParitySequence> exact_descent(std::uint64_t m, std::size_t s) {
  const u128 start = m;
  u128 x = start;
  ParitySequence q;
  for (std::size_t step = 0; step < s; ++step) {
    if (x & 1) {
      x += (x >> 1) + 1;
      q.push_back(true);
    } else {
      x >>= 1;
      q.push_back(false);
    }
    if (x < start) {
      if (step + 1 == s) return q;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

void scan_block(std::uint64_t first, std::uint64_t last, std::size_t s,
                std::vector<MinimalSequence>& out) {
  for (std::uint64_t m = first; m < last; m += 2) {
    if (auto q = exact_descent(m, s)) {
      out.push_back({BigInt(m), std::move(*q), static_cast<Mod12Class>(m % 12)});
    }
  }
}

}  // namespace

std::vector<MinimalSequence> enumerate_minimal(std::size_t s, std::size_t cap,
                                               unsigned workers) {
  if (s < 1) throw DomainError("enumerate_minimal requires s >= 1");
  if (s > cap || s > 64) {
    throw ResourceError("enumerate_minimal: s = " + std::to_string(s) +
                        " exceeds the cap of " + std::to_string(std::min<std::size_t>(cap, 64)));
  }
  std::vector<MinimalSequence> result;
  if (!odd_count_for_length(s)) return result;

  // Odd m in [3, 2^s). Iterates stay below (3/2)^s * 2^s < 2^103 for s <= 64.
  const std::uint64_t end = s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s);
  if (end <= 3) return result;
  const std::uint64_t odd_count = (end - 3 + 1) / 2;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::min<std::uint64_t>(odd_count, 1024))));
  if (workers == 1) {
    scan_block(3, end, s, result);
    return result;
  }
  std::vector<std::vector<MinimalSequence>> parts(workers);
  {
    std::vector<std::jthread> threads;
    const std::uint64_t per = odd_count / workers;
    std::uint64_t first = 3;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t count = per + (w < odd_count % workers ? 1 : 0);
      const std::uint64_t last = first + 2 * count;
      threads.emplace_back([first, last, s, &part = parts[w]] { scan_block(first, last, s, part); });
      first = last;
    }
  }
  for (auto& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(result));
  }
  return result;
}

std::vector<Table2Row> table2_rows(std::uint64_t max_n, std::size_t q_cap) {
  if (max_n < 3) throw DomainError("table2_rows requires max_n >= 3");
  std::vector<Table2Row> rows;
  for (std::uint64_t n = 3; n <= max_n; n += 4) {
    // n = 3 (mod 4) covers exactly 12i+3, 12i+7 and 12i+11.
    StoppingRecord rec = stopping_record(BigInt(n));
    Table2Row row;
    row.n = n;
    row.cls = static_cast<Mod12Class>(n % 12);
    if (rec.q.length() <= q_cap) row.q = std::move(rec.q);
    row.value = std::move(rec.value);
    rows.push_back(std::move(row));
    if (n > max_n - 4) break;
  }
  return rows;
}

}  // namespace collatz
