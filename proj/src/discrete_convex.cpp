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

#include "cde/discrete_convex.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cde/errors.hpp"

namespace cde {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Compositions of alpha into K parts, as a floor on enumeration cost.
double composition_count(int alpha, int k) {
  double count = 1.0;
  for (int i = 1; i < k; ++i) count *= static_cast<double>(alpha + i) / i;
  return count;
}

double region_value(const FairnessObjective& obj, const EnumeratedRegion& region,
                    const RateVector& r) {
  return region_contains(region, r) ? obj.separable_sum(r) : kInf;
}

void require_constant_sum(const EnumeratedRegion& region) {
  for (const RateVector& r : region.members) {
    if (r.size() != region.members.front().size()) {
      throw std::invalid_argument("region members differ in length");
    }
    if (rate_sum(r) != region.alpha) {
      throw std::invalid_argument("region member " + format_rates(r) +
                                  " does not have sum-rate " +
                                  std::to_string(region.alpha));
    }
  }
}

}  // namespace

FairnessObjective::FairnessObjective(Kind kind, int alpha, std::vector<double> weights)
    : kind_(kind), alpha_(alpha), weights_(std::move(weights)) {
  if (alpha_ < 0) throw std::invalid_argument("alpha must be nonnegative");
  for (double w : weights_) {
    if (w < 0.0 || !std::isfinite(w)) {
      throw std::invalid_argument("weights must be finite and nonnegative");
    }
  }
}

FairnessObjective FairnessObjective::uniform(int alpha) {
  return {Kind::kUniform, alpha, {}};
}
FairnessObjective FairnessObjective::jain(int alpha) {
  return {Kind::kJain, alpha, {}};
}
FairnessObjective FairnessObjective::proportional(int alpha) {
  return {Kind::kProportional, alpha, {}};
}
FairnessObjective FairnessObjective::weighted_linear(int alpha,
                                                     std::vector<double> weights) {
  return {Kind::kWeightedLinear, alpha, std::move(weights)};
}

std::string FairnessObjective::name() const {
  switch (kind_) {
    case Kind::kUniform: return "uniform";
    case Kind::kJain: return "jain";
    case Kind::kProportional: return "proportional";
    case Kind::kWeightedLinear: return "weighted";
  }
  return "?";
}

double FairnessObjective::term(int client, int count) const {
  if (count < 0) return kInf;
  switch (kind_) {
    case Kind::kUniform:
      return count == 0 ? 0.0 : count * std::log(static_cast<double>(count));
    case Kind::kJain:
      if (alpha_ == 0) return count == 0 ? 0.0 : kInf;
      return static_cast<double>(count) * count /
             (static_cast<double>(alpha_) * alpha_);
    case Kind::kProportional:
      return count == 0 ? kInf : -std::log(static_cast<double>(count));
    case Kind::kWeightedLinear:
      if (client < 0 || client >= static_cast<int>(weights_.size())) {
        throw std::invalid_argument("weight vector too short for client " +
                                    std::to_string(client + 1));
      }
      return weights_[client] * count;
  }
  return kInf;
}

double FairnessObjective::marginal(int client, int count) const {
  if (kind_ == Kind::kProportional && count == 0) return -kInf;
  return term(client, count + 1) - term(client, count);
}

double FairnessObjective::separable_sum(const RateVector& r) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    sum += term(static_cast<int>(j), r[j]);
  }
  return sum;
}

double evaluate(const FairnessObjective& obj, const MissingTable& missing,
                const RateVector& r) {
  if (!in_R_alpha(missing, obj.alpha(), r)) return kInf;
  return obj.separable_sum(r);
}

bool region_contains(const EnumeratedRegion& region, const RateVector& r) {
  return std::binary_search(region.members.begin(), region.members.end(), r);
}

EnumeratedRegion enumerate_R_alpha(const Instance& inst, int alpha) {
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  const int k = inst.num_clients;
  if (k > 10 || composition_count(alpha, k) > 2e7) {
    throw GuardError("enumeration of sum " + std::to_string(alpha) + " over " +
                     std::to_string(k) + " clients exceeds the desk-scale guard");
  }

  const MissingTable missing = missing_table(inst);
  EnumeratedRegion region;
  region.alpha = alpha;
  RateVector r(k, 0);
  // Lexicographic recursion: assign r[0] ascending, then the rest.
  auto recurse = [&](auto&& self, int client, int remaining) -> void {
    if (client == k - 1) {
      r[client] = remaining;
      if (in_R_alpha(missing, alpha, r)) region.members.push_back(r);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      r[client] = v;
      self(self, client + 1, remaining - v);
    }
  };
  if (k == 0) throw std::invalid_argument("instance has no clients");
  recurse(recurse, 0, alpha);
  return region;
}

ExchangeReport check_exchange_axiom(const EnumeratedRegion& region) {
  require_constant_sum(region);
  const int k = region.members.empty()
                    ? 0
                    : static_cast<int>(region.members.front().size());
  for (const RateVector& x : region.members) {
    for (const RateVector& y : region.members) {
      for (int u = 0; u < k; ++u) {
        if (x[u] <= y[u]) continue;
        bool exchanged = false;
        for (int v = 0; v < k && !exchanged; ++v) {
          if (x[v] >= y[v]) continue;
          RateVector moved = x;
          moved[u] -= 1;
          moved[v] += 1;
          exchanged = region_contains(region, moved);
        }
        if (!exchanged) return {false, x, y, u};
      }
    }
  }
  return {};
}

MConvexReport check_mconvex_inequality(const FairnessObjective& obj,
                                       const EnumeratedRegion& region) {
  require_constant_sum(region);
  const int k = region.members.empty()
                    ? 0
                    : static_cast<int>(region.members.front().size());
  for (const RateVector& x : region.members) {
    for (const RateVector& y : region.members) {
      const double base = region_value(obj, region, x) + region_value(obj, region, y);
      for (int u = 0; u < k; ++u) {
        if (x[u] <= y[u]) continue;
        bool satisfied = false;
        for (int v = 0; v < k && !satisfied; ++v) {
          if (x[v] >= y[v]) continue;
          RateVector xm = x, ym = y;
          xm[u] -= 1;
          xm[v] += 1;
          ym[u] += 1;
          ym[v] -= 1;
          satisfied = base >= region_value(obj, region, xm) +
                                  region_value(obj, region, ym) - kObjectiveTol;
        }
        if (!satisfied) return {false, x, y, u};
      }
    }
  }
  return {};
}

bool check_optimality(const FairnessObjective& obj, const MissingTable& missing,
                      const RateVector& r) {
  if (!in_R_alpha(missing, obj.alpha(), r)) {
    throw std::invalid_argument("optimality is defined only on feasible strategies; " +
                                format_rates(r) + " is infeasible");
  }
  const int k = missing.num_clients();
  const double value = obj.separable_sum(r);
  for (int u = 0; u < k; ++u) {
    if (r[u] == 0) continue;
    for (int v = 0; v < k; ++v) {
      if (v == u) continue;
      RateVector moved = r;
      moved[u] -= 1;
      moved[v] += 1;
      if (!in_R_alpha(missing, obj.alpha(), moved)) continue;
      if (obj.separable_sum(moved) < value - kObjectiveTol) return false;
    }
  }
  return true;
}

std::vector<RateVector> brute_force_argmin(const FairnessObjective& obj,
                                           const EnumeratedRegion& region) {
  if (region.members.empty()) {
    throw std::invalid_argument("cannot minimize over an empty region");
  }
  double best = kInf;
  for (const RateVector& r : region.members) {
    best = std::min(best, obj.separable_sum(r));
  }
  if (best == kInf) {
    throw std::invalid_argument("objective is infinite on every member");
  }
  std::vector<RateVector> argmin;
  for (const RateVector& r : region.members) {
    if (obj.separable_sum(r) <= best + kObjectiveTol) argmin.push_back(r);
  }
  return argmin;
}

int l1_size(const EnumeratedRegion& region) {
  if (region.members.empty()) {
    throw std::invalid_argument("l1 size of an empty region is undefined");
  }
  int best = 0;
  for (std::size_t i = 0; i < region.members.size(); ++i) {
    for (std::size_t j = i + 1; j < region.members.size(); ++j) {
      best = std::max(best, l1_distance(region.members[i], region.members[j]));
    }
  }
  return best;
}

CheckResult check_tight_closure(const MissingTable& missing,
                                const EnumeratedRegion& region) {
  require_constant_sum(region);
  const ClientSubset full = missing.full();
  for (const RateVector& r : region.members) {
    const std::vector<ClientSubset> tight = tight_sets(missing, r);
    std::vector<bool> is_tight(std::size_t{1} << missing.num_clients(), false);
    for (ClientSubset s : tight) is_tight[s] = true;
    for (ClientSubset x : tight) {
      for (ClientSubset y : tight) {
        if ((x & y) == 0 || (x | y) == full) continue;
        if (!is_tight[x & y]) {
          return {false, "at " + format_rates(r) + ": " + subset_to_string(x) +
                             " and " + subset_to_string(y) +
                             " are tight but their intersection is not"};
        }
      }
    }
  }
  return {};
}

CheckResult check_sup_mapping(const TruncationTable& table,
                              const EnumeratedRegion& region) {
  require_constant_sum(region);
  if (region.members.empty()) {
    throw std::invalid_argument("sup-mapping check needs a nonempty region");
  }
  const ClientSubset full = table.full();
  for (ClientSubset s = 0; s <= full; ++s) {
    long long sup = 0;
    for (const RateVector& r : region.members) {
      sup = std::max<long long>(sup, rate_sum(r, s));
    }
    if (sup != table.truncated[s]) {
      return {false, "max r(" + subset_to_string(s) + ") = " + std::to_string(sup) +
                         " but the truncated table gives " +
                         std::to_string(table.truncated[s])};
    }
  }
  return {};
}

void write_region_csv(const EnumeratedRegion& region, std::ostream& out) {
  int k = region.members.empty() ? 0 : static_cast<int>(region.members.front().size());
  for (int j = 0; j < k; ++j) out << (j > 0 ? "," : "") << "r_" << (j + 1);
  out << '\n';
  for (const RateVector& r : region.members) {
    for (std::size_t j = 0; j < r.size(); ++j) out << (j > 0 ? "," : "") << r[j];
    out << '\n';
  }
}

EnumeratedRegion read_region_csv(std::istream& in) {
  EnumeratedRegion region;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty region file");
  std::size_t columns = line.empty() ? 0 : 1;
  for (char c : line) {
    if (c == ',') ++columns;
  }
  if (columns == 0) throw ParseError("region file has no columns");

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    RateVector r;
    int v = 0;
    while (row >> v) r.push_back(v);
    if (!row.eof() || r.size() != columns) {
      throw ParseError("malformed region row: " + line);
    }
    region.members.push_back(std::move(r));
  }
  std::sort(region.members.begin(), region.members.end());
  region.members.erase(std::unique(region.members.begin(), region.members.end()),
                       region.members.end());
  if (!region.members.empty()) region.alpha = rate_sum(region.members.front());
  return region;
}

}  // namespace cde
