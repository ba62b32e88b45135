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

#ifndef CDE_TESTS_FIXTURES_HPP
#define CDE_TESTS_FIXTURES_HPP

#include <set>
#include <string>
#include <vector>

#include "cde/instance.hpp"
#include "cde/polyhedra.hpp"

namespace cde::testing {

// Three clients, six packets; the running example of the whole test suite.
// Client 1 holds {1..5}, client 2 holds {1,2,6}, client 3 holds {3,4,6}.
// Its minimum sum-rate is 4.
inline std::string sample3x6_text() {
  return "cde v1\n"
         "clients 3\n"
         "packets 6\n"
         "has 1: 1 2 3 4 5\n"
         "has 2: 1 2 6\n"
         "has 3: 3 4 6\n";
}

inline Instance sample3x6() { return parse_instance(sample3x6_text()); }

// ---------------------------------------------------------------------------
// Independent brute-force oracles. These recompute everything straight from
// the has-sets with plain std::set algebra, deliberately sharing no code with
// the library paths they are used to check.
// ---------------------------------------------------------------------------

// |intersection of the complements of the has-sets outside S|, i.e. the
// packets missing at every client outside S; 0 when S is everything.
inline int naive_missing(const Instance& inst, ClientSubset s) {
  std::set<int> acc;
  for (int p = 1; p <= inst.num_packets; ++p) acc.insert(p);
  bool any_outside = false;
  for (int j = 0; j < inst.num_clients; ++j) {
    if (subset_contains(s, j)) continue;
    any_outside = true;
    std::set<int> complement;
    for (int p = 1; p <= inst.num_packets; ++p) {
      if (!inst.client_has(j, p)) complement.insert(p);
    }
    std::set<int> next;
    for (int p : acc) {
      if (complement.count(p)) next.insert(p);
    }
    acc = std::move(next);
  }
  return any_outside ? static_cast<int>(acc.size()) : 0;
}

// The constraint check from first principles.
inline bool naive_feasible(const Instance& inst, const RateVector& r) {
  const ClientSubset full = full_subset(inst.num_clients);
  for (ClientSubset s = 0; s < full; ++s) {
    int sum = 0;
    for (int j = 0; j < inst.num_clients; ++j) {
      if (subset_contains(s, j)) sum += r[j];
    }
    if (sum < naive_missing(inst, s)) return false;
  }
  return true;
}

// All nonnegative integer vectors with the given sum that pass the naive
// constraint check, in lexicographic order.
inline std::vector<RateVector> naive_region(const Instance& inst, int alpha) {
  std::vector<RateVector> members;
  RateVector r(inst.num_clients, 0);
  auto recurse = [&](auto&& self, int client, int remaining) -> void {
    if (client == inst.num_clients - 1) {
      r[client] = remaining;
      if (naive_feasible(inst, r)) members.push_back(r);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      r[client] = v;
      self(self, client + 1, remaining - v);
    }
  };
  recurse(recurse, 0, alpha);
  return members;
}

// Smallest sum with a nonempty naive region.
inline int naive_min_sum_rate(const Instance& inst) {
  for (int alpha = 0;; ++alpha) {
    if (!naive_region(inst, alpha).empty()) return alpha;
  }
}

}  // namespace cde::testing

#endif  // CDE_TESTS_FIXTURES_HPP
