// Copyright 2026 The CDE Fairness Authors
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

#include "cde/rlnc.hpp"

#include <random>
#include <stdexcept>

namespace cde {

namespace {

using Row = std::vector<std::uint32_t>;

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t q) {
  std::uint64_t result = 1;
  base %= q;
  while (exp > 0) {
    if (exp & 1) result = result * base % q;
    base = base * base % q;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Row-echelon rank over F_q, partial pivoting on the first nonzero entry.
int rank_mod(std::vector<Row> rows, std::uint32_t q) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found][col] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);

    const std::uint64_t inv = mod_pow(rows[pivot_row][col], q - 2, q);
    for (std::size_t c = col; c < cols; ++c) {
      rows[pivot_row][c] = static_cast<std::uint32_t>(rows[pivot_row][c] * inv % q);
    }
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      const std::uint64_t factor = rows[r][col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        const std::uint64_t sub = factor * rows[pivot_row][c] % q;
        rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + q - sub) % q);
      }
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RecoveryReport verify_recovery(const Instance& inst, const RateVector& r,
                               std::uint32_t field_size, std::uint64_t seed,
                               int trials) {
  if (!is_prime(field_size)) {
    throw std::invalid_argument("field size must be prime, got " +
                                std::to_string(field_size));
  }
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const int k = inst.num_clients;
  const int n = inst.num_packets;
  if (static_cast<int>(r.size()) != k) {
    throw std::invalid_argument("rate vector has the wrong length");
  }
  for (int v : r) {
    if (v < 0) throw std::invalid_argument("transmission counts must be nonnegative");
  }

  RecoveryReport report;
  report.field_size = field_size;
  report.trials = trials;

  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));

    // All broadcasts of the trial, drawn up front: r[j] coded rows per
    // client, coefficients supported on the sender's has-set.
    std::vector<std::vector<Row>> broadcasts(k);
    for (int j = 0; j < k; ++j) {
      broadcasts[j].assign(r[j], Row(n, 0));
      for (Row& row : broadcasts[j]) {
        for (int p : inst.has_sets[j]) {
          row[p - 1] = static_cast<std::uint32_t>(rng() % field_size);
        }
      }
    }

    std::vector<int> ranks(k, 0);
    bool trial_ok = true;
    for (int receiver = 0; receiver < k; ++receiver) {
      std::vector<Row> stacked;
      for (int p : inst.has_sets[receiver]) {
        Row unit(n, 0);
        unit[p - 1] = 1;
        stacked.push_back(std::move(unit));
      }
      for (int sender = 0; sender < k; ++sender) {
        if (sender == receiver) continue;
        stacked.insert(stacked.end(), broadcasts[sender].begin(),
                       broadcasts[sender].end());
      }
      ranks[receiver] = rank_mod(std::move(stacked), field_size);
      trial_ok = trial_ok && ranks[receiver] == n;
    }

    if (!trial_ok) {
      if (report.failures == 0) report.per_client_rank = ranks;
      report.failures += 1;
    } else if (report.failures == 0 && trial == trials - 1) {
      report.per_client_rank = ranks;
    }
  }

  report.success = report.failures == 0;
  return report;
}

}  // namespace cde
