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

#ifndef CDE_SOLVERS_HPP
#define CDE_SOLVERS_HPP

#include <iosfwd>
#include <vector>

#include "cde/discrete_convex.hpp"

namespace cde {

struct SolverTrace {
  enum class Algorithm { kSda, kDa };

  Algorithm algorithm = Algorithm::kSda;
  int alpha = 0;
  std::vector<RateVector> iterates;      // front() is the start, back() the result
  std::vector<double> objective_values;  // separable objective of each iterate
  // Cumulative feasibility checks at the moment each iterate was adopted.
  std::vector<long long> oracle_calls_after;
  int iterations = 0;        // improving moves for descent, exactly alpha for greedy
  long long oracle_calls = 0;  // total feasibility checks, final sweep included

  const RateVector& start() const { return iterates.front(); }
  const RateVector& result() const { return iterates.back(); }
};

// Steepest descent over the feasible region: from `start`, repeatedly apply
// the single-pair exchange -e_u + e_v with the smallest objective value
// (ties: lexicographically smallest (u, v)) while it improves strictly.
// Exchanges with r_u = 0 are skipped without a feasibility check. Throws
// InfeasibleError when `start` is not feasible at `alpha`.
SolverTrace sda(const Instance& inst, int alpha, const FairnessObjective& obj,
                const RateVector& start);

// Greedy accumulation inside the truncated polyhedron: from the zero vector,
// add one transmission per step to the client with the smallest marginal cost
// among those that stay inside (ties: smallest client index); exactly alpha
// steps. Throws InfeasibleError when the budget is below the minimum
// sum-rate.
SolverTrace da(const Instance& inst, int alpha, const FairnessObjective& obj);

// Steepest descent under a linear cost w'r.
SolverTrace weighted_min(const Instance& inst, int alpha,
                         const std::vector<double>& weights, const RateVector& start);

// csv: k,r_1..r_K,objective,cumulative_oracle_calls
void write_trace_csv(const SolverTrace& trace, std::ostream& out);

}  // namespace cde

#endif  // CDE_SOLVERS_HPP
