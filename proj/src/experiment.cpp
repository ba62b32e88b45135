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

#include "cde/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "cde/errors.hpp"
#include "cde/solvers.hpp"

namespace cde {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t row_seed(std::uint64_t base, int k, int n, int trial) {
  std::uint64_t s = splitmix64(base);
  s = splitmix64(s ^ static_cast<std::uint64_t>(k));
  s = splitmix64(s ^ static_cast<std::uint64_t>(n) << 16);
  s = splitmix64(s ^ static_cast<std::uint64_t>(trial) << 32);
  return s;
}

}  // namespace

int experiment_max_clients() {
  int cap = 10;
  if (const char* env = std::getenv("CDE_MAX_K"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      cap = static_cast<int>(std::min<long>(v, kMaxClientsCeiling));
    }
  }
  return cap;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  if (config.k_min < 2 || config.k_min > config.k_max) {
    throw std::invalid_argument("bad client range");
  }
  if (config.k_max > experiment_max_clients()) {
    throw GuardError("client range exceeds the experiment cap of " +
                     std::to_string(experiment_max_clients()) +
                     " (set CDE_MAX_K to raise it)");
  }
  if (config.n_min < 1 || config.n_min > config.n_max || config.n_step < 1) {
    throw std::invalid_argument("bad packet range");
  }
  if (config.repetitions < 1) throw std::invalid_argument("bad repetition count");

  std::vector<ExperimentRow> rows;
  for (int k = config.k_min; k <= config.k_max; ++k) {
    for (int n = config.n_min; n <= config.n_max; n += config.n_step) {
      for (int trial = 1; trial <= config.repetitions; ++trial) {
        ExperimentRow row;
        row.num_clients = k;
        row.num_packets = n;
        row.trial = trial;
        row.seed = row_seed(config.seed, k, n, trial);

        const Instance inst = random_instance(row.seed, k, n);
        row.alpha_hat = min_sum_rate(inst);
        const FairnessObjective obj = FairnessObjective::uniform(row.alpha_hat);

        const RateVector start = greedy_vertex(inst, row.alpha_hat);
        const SolverTrace descent = sda(inst, row.alpha_hat, obj, start);
        // The greedy accumulation gets the budget only; the start is not reused.
        const SolverTrace accumulation = da(inst, row.alpha_hat, obj);

        row.sda_iterations = descent.iterations;
        row.da_iterations = accumulation.iterations;
        row.sda_oracle_calls = descent.oracle_calls;
        row.da_oracle_calls = accumulation.oracle_calls;
        row.sda_objective = descent.objective_values.back();
        row.da_objective = accumulation.objective_values.back();
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_experiment_csv(const std::vector<ExperimentRow>& rows, std::ostream& out) {
  out << "K,N,trial,seed,alpha_hat,sda_iterations,da_iterations,"
         "sda_oracle_calls,da_oracle_calls,sda_objective,da_objective\n";
  char buf[32];
  for (const ExperimentRow& row : rows) {
    out << row.num_clients << ',' << row.num_packets << ',' << row.trial << ','
        << row.seed << ',' << row.alpha_hat << ',' << row.sda_iterations << ','
        << row.da_iterations << ',' << row.sda_oracle_calls << ','
        << row.da_oracle_calls;
    std::snprintf(buf, sizeof buf, "%.12g", row.sda_objective);
    out << ',' << buf;
    std::snprintf(buf, sizeof buf, "%.12g", row.da_objective);
    out << ',' << buf << '\n';
  }
}

}  // namespace cde
