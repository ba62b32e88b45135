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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cde/errors.hpp"
#include "cde/experiment.hpp"
#include "cde/rlnc.hpp"
#include "cde/solvers.hpp"

namespace {

using namespace cde;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerification = 3;

FairnessObjective make_objective(const std::string& spec, int alpha, int num_clients) {
  if (spec == "uniform") return FairnessObjective::uniform(alpha);
  if (spec == "jain") return FairnessObjective::jain(alpha);
  if (spec == "proportional") return FairnessObjective::proportional(alpha);
  if (spec.rfind("weighted:", 0) == 0) {
    std::vector<double> weights;
    std::string list = spec.substr(9);
    std::replace(list.begin(), list.end(), ',', ' ');
    std::istringstream in(list);
    double w = 0.0;
    while (in >> w) weights.push_back(w);
    if (!in.eof() || static_cast<int>(weights.size()) != num_clients) {
      throw std::invalid_argument("expected weighted:w1,...,wK with K=" +
                                  std::to_string(num_clients));
    }
    return FairnessObjective::weighted_linear(alpha, std::move(weights));
  }
  throw std::invalid_argument(
      "unknown objective '" + spec +
      "' (use uniform, jain, proportional or weighted:w1,...,wK)");
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range '" + text + "', expected a..b");
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write to " + path);
  return out;
}

void print_trace_summary(const SolverTrace& trace, const std::string& algorithm) {
  std::cout << "algorithm: " << algorithm << '\n';
  std::cout << "alpha: " << trace.alpha << '\n';
  std::cout << "result: " << format_rates(trace.result()) << '\n';
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", trace.objective_values.back());
  std::cout << "objective: " << buf << '\n';
  std::cout << "iterations: " << trace.iterations << '\n';
  std::cout << "oracle_calls: " << trace.oracle_calls << '\n';
}

struct SolveOptions {
  std::string instance_path;
  int alpha = -1;
  bool use_min_sum_rate = false;
  std::string objective = "uniform";
  std::string algorithm = "sda";
  std::vector<int> start;
  bool start_given = false;
  std::string trace_path;
};

int run_solve(const SolveOptions& opt) {
  const Instance inst = read_instance_file(opt.instance_path);
  if (opt.use_min_sum_rate == (opt.alpha >= 0)) {
    throw std::invalid_argument("pass exactly one of --alpha and --min-sum-rate");
  }
  const int alpha = opt.use_min_sum_rate ? min_sum_rate(inst) : opt.alpha;
  const FairnessObjective obj = make_objective(opt.objective, alpha, inst.num_clients);

  SolverTrace trace;
  if (opt.algorithm == "sda") {
    const RateVector start = opt.start_given ? opt.start : greedy_vertex(inst, alpha);
    trace = sda(inst, alpha, obj, start);
  } else {
    if (opt.start_given) {
      throw std::invalid_argument("--start only applies to --algorithm sda");
    }
    trace = da(inst, alpha, obj);
  }

  print_trace_summary(trace, opt.algorithm);
  if (!opt.trace_path.empty()) {
    auto out = open_output(opt.trace_path);
    write_trace_csv(trace, out);
  }
  return kExitOk;
}

int run_min_sum_rate(const std::string& instance_path) {
  const Instance inst = read_instance_file(instance_path);
  const int alpha_hat = min_sum_rate(inst);
  std::cout << "alpha_hat: " << alpha_hat << '\n';
  std::cout << "witness: " << format_rates(greedy_vertex(inst, alpha_hat)) << '\n';
  return kExitOk;
}

int run_enumerate(const std::string& instance_path, int alpha,
                  const std::string& out_path) {
  const Instance inst = read_instance_file(instance_path);
  const EnumeratedRegion region = enumerate_R_alpha(inst, alpha);
  if (out_path.empty()) {
    write_region_csv(region, std::cout);
  } else {
    auto out = open_output(out_path);
    write_region_csv(region, out);
  }
  return kExitOk;
}

struct CheckOptions {
  std::string instance_path;
  int alpha = -1;
  std::vector<std::string> properties;
  std::string region_path;
  std::string dump_table_path;
};

int run_check(const CheckOptions& opt) {
  const Instance inst = read_instance_file(opt.instance_path);

  EnumeratedRegion region;
  int alpha = opt.alpha;
  if (!opt.region_path.empty()) {
    std::ifstream in(opt.region_path, std::ios::binary);
    if (!in) throw ParseError("cannot open region file: " + opt.region_path);
    region = read_region_csv(in);
    if (!region.members.empty() &&
        static_cast<int>(region.members.front().size()) != inst.num_clients) {
      throw ParseError("region width does not match the client count");
    }
    if (alpha >= 0 && alpha != region.alpha) {
      throw std::invalid_argument("--alpha disagrees with the region file sums");
    }
    alpha = region.alpha;
  } else {
    if (alpha < 0) throw std::invalid_argument("pass --alpha or --region");
    region = enumerate_R_alpha(inst, alpha);
  }

  const MissingTable missing = missing_table(inst);
  const TruncationTable table = truncation_table(inst, alpha);
  if (!opt.dump_table_path.empty()) {
    auto out = open_output(opt.dump_table_path);
    write_table_csv(table, out);
  }
  if (region.members.empty()) {
    std::cout << "region is empty at alpha=" << alpha << " (infeasible budget)\n";
    return kExitInfeasible;
  }

  bool all_pass = true;
  auto report = [&all_pass](const std::string& name, bool holds,
                            const std::string& witness) {
    if (holds) {
      std::cout << name << ": pass\n";
    } else {
      std::cout << name << ": FAIL " << witness << '\n';
      all_pass = false;
    }
  };

  for (const std::string& property : opt.properties) {
    if (property == "exc") {
      const ExchangeReport r = check_exchange_axiom(region);
      report("exc", r.holds,
             r.holds ? "" : "x=" + format_rates(r.x) + " y=" + format_rates(r.y) +
                                " u=" + std::to_string(r.u + 1));
    } else if (property == "mconvex") {
      bool holds = true;
      std::string witness;
      for (const auto& obj : {FairnessObjective::uniform(alpha),
                              FairnessObjective::jain(alpha)}) {
        const MConvexReport r = check_mconvex_inequality(obj, region);
        if (!r.holds) {
          holds = false;
          witness = obj.name() + ": x=" + format_rates(r.x) +
                    " y=" + format_rates(r.y) + " u=" + std::to_string(r.u + 1);
          break;
        }
      }
      report("mconvex", holds, witness);
    } else if (property == "lemma1") {
      const CheckResult r = check_tight_closure(missing, region);
      report("lemma1", r.holds, r.witness);
    } else if (property == "supmap") {
      const CheckResult r = check_sup_mapping(table, region);
      report("supmap", r.holds, r.witness);
    } else if (property == "submod") {
      const SubmodularityReport r = check_submodularity(table);
      report("submod", r.holds,
             r.holds ? "" : "X=" + subset_to_string(r.x) + " Y=" + subset_to_string(r.y));
    } else {
      throw std::invalid_argument("unknown property '" + property + "'");
    }
  }
  return all_pass ? kExitOk : kExitVerification;
}

struct VerifyOptions {
  std::string instance_path;
  std::vector<int> rates;
  std::uint32_t field_size = kDefaultFieldSize;
  int trials = 10;
  std::uint64_t seed = 1;
};

int run_verify(const VerifyOptions& opt) {
  const Instance inst = read_instance_file(opt.instance_path);
  const RecoveryReport report =
      verify_recovery(inst, opt.rates, opt.field_size, opt.seed, opt.trials);
  std::cout << "field: " << report.field_size << '\n';
  std::cout << "trials: " << report.trials << '\n';
  std::cout << "failures: " << report.failures << '\n';
  std::cout << "per_client_rank:";
  for (int rank : report.per_client_rank) std::cout << ' ' << rank;
  std::cout << '\n';
  std::cout << "verdict: " << (report.success ? "success" : "failure") << '\n';
  return report.success ? kExitOk : kExitVerification;
}

struct ExperimentOptions {
  std::string k_range = "3..10";
  std::string n_range = "6..30";
  int n_step = 1;
  int repetitions = 20;
  std::uint64_t seed = 1;
  std::string out_path;
};

int run_experiment_cmd(const ExperimentOptions& opt) {
  ExperimentConfig config;
  std::tie(config.k_min, config.k_max) = parse_range(opt.k_range);
  std::tie(config.n_min, config.n_max) = parse_range(opt.n_range);
  config.n_step = opt.n_step;
  config.repetitions = opt.repetitions;
  config.seed = opt.seed;

  const std::vector<ExperimentRow> rows = run_experiment(config);
  auto out = open_output(opt.out_path);
  write_experiment_csv(rows, out);
  std::cout << "rows: " << rows.size() << '\n';
  std::cout << "wrote: " << opt.out_path << '\n';
  return kExitOk;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fairest constant sum-rate transmission strategies for "
               "cooperative data exchange"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand(
      "solve", "Find the fairest strategy at a fixed sum-rate budget");
  solve->add_option("instance", solve_opt.instance_path, "instance file")
      ->required()
      ->check(CLI::ExistingFile);
  auto* alpha_opt = solve->add_option("--alpha", solve_opt.alpha, "sum-rate budget");
  solve->add_flag("--min-sum-rate", solve_opt.use_min_sum_rate,
                  "use the minimum feasible sum-rate");
  solve->add_option("--objective", solve_opt.objective,
                    "uniform | jain | proportional | weighted:w1,...,wK");
  solve->add_option("--algorithm", solve_opt.algorithm, "sda | da")
      ->check(CLI::IsMember({"sda", "da"}));
  auto* start_opt = solve->add_option("--start", solve_opt.start,
                                      "starting vector r1,...,rK (sda only)")
                        ->delimiter(',');
  solve->add_option("--trace", solve_opt.trace_path, "write the iterate trace CSV here");

  std::string msr_path;
  auto* msr = app.add_subcommand("min-sum-rate",
                                 "Print the minimum sum-rate and a witness");
  msr->add_option("instance", msr_path, "instance file")
      ->required()
      ->check(CLI::ExistingFile);

  std::string enum_path, enum_out;
  int enum_alpha = 0;
  auto* enumerate = app.add_subcommand(
      "enumerate", "List every feasible strategy at a sum-rate (CSV)");
  enumerate->add_option("instance", enum_path, "instance file")
      ->required()
      ->check(CLI::ExistingFile);
  enumerate->add_option("--alpha", enum_alpha, "sum-rate budget")->required();
  enumerate->add_option("--out", enum_out, "output CSV path (default stdout)");

  CheckOptions check_opt;
  check_opt.properties = {"exc", "mconvex", "lemma1", "supmap", "submod"};
  auto* check = app.add_subcommand(
      "check", "Check structural properties of the feasible region");
  check->add_option("instance", check_opt.instance_path, "instance file")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("--alpha", check_opt.alpha, "sum-rate budget");
  check->add_option("--properties", check_opt.properties,
                    "subset of exc,mconvex,lemma1,supmap,submod")
      ->delimiter(',');
  check->add_option("--region", check_opt.region_path,
                    "check this region CSV instead of enumerating");
  check->add_option("--dump-table", check_opt.dump_table_path,
                    "write the crossing/truncated table CSV here");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand(
      "verify", "Simulate random linear coded exchange for a strategy");
  verify->add_option("instance", verify_opt.instance_path, "instance file")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--rates", verify_opt.rates, "strategy r1,...,rK")
      ->required()
      ->delimiter(',');
  verify->add_option("--field", verify_opt.field_size, "prime field size");
  verify->add_option("--trials", verify_opt.trials, "number of trials");
  verify->add_option("--seed", verify_opt.seed, "base seed");

  ExperimentOptions exp_opt;
  auto* experiment = app.add_subcommand(
      "experiment", "Compare the two solvers over random instances (CSV)");
  experiment->add_option("--k-range", exp_opt.k_range, "client counts, a..b");
  experiment->add_option("--n-range", exp_opt.n_range, "packet counts, a..b");
  experiment->add_option("--n-step", exp_opt.n_step, "packet count step");
  experiment->add_option("--reps", exp_opt.repetitions, "repetitions per cell");
  experiment->add_option("--seed", exp_opt.seed, "base seed");
  experiment->add_option("--out", exp_opt.out_path, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (alpha_opt->count() == 0) solve_opt.alpha = -1;
  solve_opt.start_given = start_opt->count() > 0;

  if (solve->parsed()) return guarded([&] { return run_solve(solve_opt); });
  if (msr->parsed()) return guarded([&] { return run_min_sum_rate(msr_path); });
  if (enumerate->parsed()) {
    return guarded([&] { return run_enumerate(enum_path, enum_alpha, enum_out); });
  }
  if (check->parsed()) return guarded([&] { return run_check(check_opt); });
  if (verify->parsed()) return guarded([&] { return run_verify(verify_opt); });
  if (experiment->parsed()) {
    return guarded([&] { return run_experiment_cmd(exp_opt); });
  }
  return kExitInput;
}
