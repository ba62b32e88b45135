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

#ifndef CDE_EXPERIMENT_HPP
#define CDE_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace cde {

// One (K, N, trial) cell of the solver comparison under uniform fairness.
struct ExperimentRow {
  int num_clients = 0;
  int num_packets = 0;
  int trial = 0;
  std::uint64_t seed = 0;  // regenerates the row's instance on its own
  int alpha_hat = 0;
  int sda_iterations = 0;
  int da_iterations = 0;
  long long sda_oracle_calls = 0;
  long long da_oracle_calls = 0;
  double sda_objective = 0.0;
  double da_objective = 0.0;
};

struct ExperimentConfig {
  int k_min = 3;
  int k_max = 10;
  int n_min = 6;
  int n_max = 30;
  int n_step = 1;
  int repetitions = 20;
  std::uint64_t seed = 1;
};

// The client-count guard for experiments (default 10, CDE_MAX_K overrides).
int experiment_max_clients();

// For every (K, N, trial): draw a random instance, compute the minimum
// sum-rate and the ascending greedy start, then run steepest descent from
// that start and the greedy accumulation on the bare budget. Rows come out
// in (K, N, trial) order and are deterministic for a fixed seed.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

// csv: K,N,trial,seed,alpha_hat,sda_iterations,da_iterations,
//      sda_oracle_calls,da_oracle_calls,sda_objective,da_objective
void write_experiment_csv(const std::vector<ExperimentRow>& rows, std::ostream& out);

}  // namespace cde

#endif  // CDE_EXPERIMENT_HPP
