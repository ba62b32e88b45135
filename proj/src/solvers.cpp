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

#include "cde/solvers.hpp"

#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "cde/errors.hpp"

namespace cde {

namespace {

void require_alpha_match(int alpha, const FairnessObjective& obj) {
  if (obj.alpha() != alpha) {
    throw std::invalid_argument("objective was built for alpha=" +
                                std::to_string(obj.alpha()) + ", solver got alpha=" +
                                std::to_string(alpha));
  }
}

void adopt(SolverTrace& trace, const FairnessObjective& obj, const RateVector& r,
           long long calls) {
  trace.iterates.push_back(r);
  trace.objective_values.push_back(obj.separable_sum(r));
  trace.oracle_calls_after.push_back(calls);
}

}  // namespace

SolverTrace sda(const Instance& inst, int alpha, const FairnessObjective& obj,
                const RateVector& start) {
  require_alpha_match(alpha, obj);
  const MissingTable missing = missing_table(inst);
  const int k = inst.num_clients;
  if (static_cast<int>(start.size()) != k) {
    throw std::invalid_argument("start vector has the wrong length");
  }
  if (!in_R_alpha(missing, alpha, start)) {
    throw InfeasibleError("start " + format_rates(start) +
                          " is not feasible at sum-rate " + std::to_string(alpha));
  }

  SolverTrace trace;
  trace.algorithm = SolverTrace::Algorithm::kSda;
  trace.alpha = alpha;
  OracleCounter counter;
  adopt(trace, obj, start, 0);

  while (true) {
    const RateVector current = trace.iterates.back();
    const double current_value = trace.objective_values.back();

    double best_value = std::numeric_limits<double>::infinity();
    RateVector best_move;
    for (int u = 0; u < k; ++u) {
      if (current[u] == 0) continue;  // leaves the nonnegative orthant
      for (int v = 0; v < k; ++v) {
        if (v == u) continue;
        RateVector moved = current;
        moved[u] -= 1;
        moved[v] += 1;
        if (!in_R_alpha(missing, alpha, moved, &counter)) continue;
        const double value = obj.separable_sum(moved);
        // Strict improvement over the incumbent keeps the first (u, v) of a tie.
        if (best_move.empty() || value < best_value - kObjectiveTol) {
          best_value = value;
          best_move = std::move(moved);
        }
      }
    }

    if (best_move.empty() || best_value >= current_value - kObjectiveTol) break;
    adopt(trace, obj, best_move, counter.calls);
    trace.iterations += 1;
  }

  trace.oracle_calls = counter.calls;
  return trace;
}

SolverTrace da(const Instance& inst, int alpha, const FairnessObjective& obj) {
  require_alpha_match(alpha, obj);
  const TruncationTable table = truncation_table(inst, alpha);
  const int k = inst.num_clients;
  if (table.truncated[table.full()] != alpha) {
    throw InfeasibleError("sum-rate budget " + std::to_string(alpha) +
                          " is below the minimum sum-rate");
  }

  SolverTrace trace;
  trace.algorithm = SolverTrace::Algorithm::kDa;
  trace.alpha = alpha;
  OracleCounter counter;
  adopt(trace, obj, RateVector(k, 0), 0);

  for (int step = 0; step < alpha; ++step) {
    const RateVector current = trace.iterates.back();
    int chosen = -1;
    double chosen_marginal = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
      RateVector moved = current;
      moved[j] += 1;
      if (!in_P(table, moved, &counter)) continue;
      const double marginal = obj.marginal(j, current[j]);
      if (chosen < 0 || marginal < chosen_marginal - kObjectiveTol) {
        chosen = j;
        chosen_marginal = marginal;
      }
    }
    if (chosen < 0) {
      throw std::logic_error("no admissible step below the base level");
    }
    RateVector next = current;
    next[chosen] += 1;
    adopt(trace, obj, next, counter.calls);
    trace.iterations += 1;
  }

  trace.oracle_calls = counter.calls;
  return trace;
}

SolverTrace weighted_min(const Instance& inst, int alpha,
                         const std::vector<double>& weights, const RateVector& start) {
  if (static_cast<int>(weights.size()) != inst.num_clients) {
    throw std::invalid_argument("weight vector has the wrong length");
  }
  return sda(inst, alpha, FairnessObjective::weighted_linear(alpha, weights), start);
}

void write_trace_csv(const SolverTrace& trace, std::ostream& out) {
  const int k = trace.iterates.empty()
                    ? 0
                    : static_cast<int>(trace.iterates.front().size());
  out << "k";
  for (int j = 0; j < k; ++j) out << ",r_" << (j + 1);
  out << ",objective,cumulative_oracle_calls\n";
  char buf[32];
  for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
    out << i;
    for (int v : trace.iterates[i]) out << ',' << v;
    std::snprintf(buf, sizeof buf, "%.12g", trace.objective_values[i]);
    out << ',' << buf << ',' << trace.oracle_calls_after[i] << '\n';
  }
}

}  // namespace cde
