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

#ifndef CDE_RLNC_HPP
#define CDE_RLNC_HPP

#include <cstdint>
#include <vector>

#include "cde/instance.hpp"
#include "cde/polyhedra.hpp"

namespace cde {

struct RecoveryReport {
  bool success = false;        // every trial decoded at every client
  // Decoding-matrix ranks per client, taken from the first failed trial if
  // any, otherwise from the last trial.
  std::vector<int> per_client_rank;
  std::uint32_t field_size = 0;
  int trials = 0;
  int failures = 0;  // trials with at least one client below full rank

  bool operator==(const RecoveryReport&) const = default;
};

bool is_prime(std::uint32_t n);

inline constexpr std::uint32_t kDefaultFieldSize = 65521;  // largest 16-bit prime

// Simulates one-shot random linear coded exchanges: per trial, client j
// broadcasts r[j] rows with uniformly random coefficients supported on its
// has-set, and every client must reach rank N from its own unit rows plus
// everyone else's broadcasts. Deterministic: trial t draws from seed + t.
RecoveryReport verify_recovery(const Instance& inst, const RateVector& r,
                               std::uint32_t field_size, std::uint64_t seed,
                               int trials);

}  // namespace cde

#endif  // CDE_RLNC_HPP
