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

#ifndef CDE_POLYHEDRA_HPP
#define CDE_POLYHEDRA_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cde/instance.hpp"

namespace cde {

// Per-client transmission counts. The sum-rate is the element sum.
using RateVector = std::vector<int>;

int rate_sum(const RateVector& r);
int rate_sum(const RateVector& r, ClientSubset s);
int l1_distance(const RateVector& a, const RateVector& b);
std::string format_rates(const RateVector& r);  // "(2,1,1)"

// Counts feasibility-oracle invocations across a solver run.
struct OracleCounter {
  long long calls = 0;
};

// Crossing set function at S: alpha minus the number of packets missing at
// every client of S; 0 at the empty set. Values can be negative for small
// alpha. Computed directly from the has-sets.
long long crossing_value(const Instance& inst, int alpha, ClientSubset s);

// The crossing function and its partition truncation (the pointwise minimum
// of sums of crossing values over all partitions of S), tabulated for every
// subset. The truncated table is submodular and describes the polyhedron
// that contains the feasible strategies of sum-rate alpha.
struct TruncationTable {
  int num_clients = 0;
  int alpha = 0;
  std::vector<long long> crossing;   // indexed by subset mask
  std::vector<long long> truncated;  // min over partitions of crossing sums

  ClientSubset full() const { return full_subset(num_clients); }
};

// Subset-convolution dynamic program over all 2^K subsets, O(3^K) total.
TruncationTable truncation_table(const Instance& inst, int alpha);

// Debug export, one row per subset: subset_mask,crossing,truncated
void write_table_csv(const TruncationTable& table, std::ostream& out);

// r achieves universal recovery at sum-rate alpha: sum(r) == alpha and
// r(S) >= missing(S) for every proper subset S. Each call increments the
// supplied counter once.
bool in_R_alpha(const MissingTable& missing, int alpha, const RateVector& r,
                OracleCounter* counter = nullptr);

// r lies in the polyhedron of the truncated table: r >= 0 and
// r(S) <= truncated(S) for every subset S. Counted like in_R_alpha.
bool in_P(const TruncationTable& table, const RateVector& r,
          OracleCounter* counter = nullptr);

// All proper subsets (including the empty set) whose constraint holds with
// equality at r. Requires r feasible for its own sum-rate; throws
// std::invalid_argument otherwise.
std::vector<ClientSubset> tight_sets(const MissingTable& missing, const RateVector& r);

std::vector<int> ascending_order(int num_clients);
std::vector<int> shuffled_order(int num_clients, std::uint64_t seed);

// Vertex of the base polyhedron by prefix differences of the truncated table
// along `order` (a permutation of 0..K-1). The result is integral and
// feasible whenever the budget is attainable; throws InfeasibleError when
// truncated(C) falls short of alpha.
RateVector greedy_vertex(const TruncationTable& table, const std::vector<int>& order);
RateVector greedy_vertex(const Instance& inst, int alpha, const std::vector<int>& order);
RateVector greedy_vertex(const Instance& inst, int alpha);  // ascending order

// Smallest alpha with a feasible strategy: linear search upward from the
// constraint lower bound, testing truncated(C) == alpha; the greedy witness
// is verified before returning.
int min_sum_rate(const Instance& inst);

struct SubmodularityReport {
  bool holds = true;
  ClientSubset x = 0, y = 0;  // violating pair when !holds
};

// Checks truncated(X) + truncated(Y) >= truncated(X|Y) + truncated(X&Y) over
// all pairs of subsets.
SubmodularityReport check_submodularity(const TruncationTable& table);

}  // namespace cde

#endif  // CDE_POLYHEDRA_HPP
