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

#include "cde/polyhedra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "cde/errors.hpp"

namespace cde {

namespace {

void require_size(const RateVector& r, int num_clients) {
  if (static_cast<int>(r.size()) != num_clients) {
    throw std::invalid_argument("rate vector has " + std::to_string(r.size()) +
                                " entries, expected " + std::to_string(num_clients));
  }
}

}  // namespace

int rate_sum(const RateVector& r) { return std::accumulate(r.begin(), r.end(), 0); }

int rate_sum(const RateVector& r, ClientSubset s) {
  int sum = 0;
  for (ClientSubset rest = s; rest != 0; rest &= rest - 1) {
    sum += r[std::countr_zero(rest)];
  }
  return sum;
}

int l1_distance(const RateVector& a, const RateVector& b) {
  require_size(b, static_cast<int>(a.size()));
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

std::string format_rates(const RateVector& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(r[i]);
  }
  out += ')';
  return out;
}

long long crossing_value(const Instance& inst, int alpha, ClientSubset s) {
  if (s == 0) return 0;
  // Packets missing at every client of S: no owner inside S.
  int missing_everywhere = 0;
  for (int p = 1; p <= inst.num_packets; ++p) {
    if ((inst.owners(p) & s) == 0) ++missing_everywhere;
  }
  return static_cast<long long>(alpha) - missing_everywhere;
}

TruncationTable truncation_table(const Instance& inst, int alpha) {
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  const MissingTable missing = missing_table(inst);
  const int k = inst.num_clients;
  const std::size_t size = std::size_t{1} << k;
  const ClientSubset full = full_subset(k);

  TruncationTable table;
  table.num_clients = k;
  table.alpha = alpha;
  table.crossing.assign(size, 0);
  // The packets missing at every client of S are exactly the packets held
  // only outside S, i.e. missing(C \ S).
  for (std::size_t s = 1; s < size; ++s) {
    table.crossing[s] = alpha - missing(full ^ static_cast<ClientSubset>(s));
  }

  // Partition minimum: each partition of S has exactly one part containing
  // the lowest bit of S, so scanning the submasks that contain it covers
  // every partition once.
  table.truncated.assign(size, 0);
  for (std::size_t s = 1; s < size; ++s) {
    const std::size_t low = s & (~s + 1);
    const std::size_t rest = s ^ low;
    long long best = std::numeric_limits<long long>::max();
    std::size_t sub = rest;
    while (true) {
      const std::size_t part = sub | low;
      best = std::min(best, table.crossing[part] + table.truncated[s ^ part]);
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    table.truncated[s] = best;
  }
  return table;
}

void write_table_csv(const TruncationTable& table, std::ostream& out) {
  out << "subset_mask,crossing,truncated\n";
  for (std::size_t s = 0; s < table.crossing.size(); ++s) {
    out << s << ',' << table.crossing[s] << ',' << table.truncated[s] << '\n';
  }
}

bool in_R_alpha(const MissingTable& missing, int alpha, const RateVector& r,
                OracleCounter* counter) {
  require_size(r, missing.num_clients());
  if (counter != nullptr) counter->calls += 1;
  for (int v : r) {
    if (v < 0) return false;
  }
  if (rate_sum(r) != alpha) return false;
  const ClientSubset full = missing.full();
  for (ClientSubset s = 0; s < full; ++s) {
    if (rate_sum(r, s) < missing(s)) return false;
  }
  return true;
}

bool in_P(const TruncationTable& table, const RateVector& r, OracleCounter* counter) {
  require_size(r, table.num_clients);
  if (counter != nullptr) counter->calls += 1;
  for (int v : r) {
    if (v < 0) return false;
  }
  const ClientSubset full = table.full();
  for (ClientSubset s = 1; s <= full; ++s) {
    if (rate_sum(r, s) > table.truncated[s]) return false;
  }
  return true;
}

std::vector<ClientSubset> tight_sets(const MissingTable& missing, const RateVector& r) {
  if (!in_R_alpha(missing, rate_sum(r), r)) {
    throw std::invalid_argument("tight sets are defined only for feasible strategies; " +
                                format_rates(r) + " is infeasible");
  }
  std::vector<ClientSubset> tight;
  const ClientSubset full = missing.full();
  for (ClientSubset s = 0; s < full; ++s) {
    if (rate_sum(r, s) == missing(s)) tight.push_back(s);
  }
  return tight;
}

std::vector<int> ascending_order(int num_clients) {
  std::vector<int> order(num_clients);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<int> shuffled_order(int num_clients, std::uint64_t seed) {
  std::vector<int> order = ascending_order(num_clients);
  std::mt19937_64 rng(seed);
  for (int i = num_clients - 1; i > 0; --i) {
    std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
  }
  return order;
}

RateVector greedy_vertex(const TruncationTable& table, const std::vector<int>& order) {
  const int k = table.num_clients;
  if (static_cast<int>(order.size()) != k) {
    throw std::invalid_argument("order must be a permutation of all clients");
  }
  std::vector<bool> seen(k, false);
  for (int j : order) {
    if (j < 0 || j >= k || seen[j]) {
      throw std::invalid_argument("order must be a permutation of all clients");
    }
    seen[j] = true;
  }
  if (table.truncated[table.full()] != table.alpha) {
    throw InfeasibleError("sum-rate budget " + std::to_string(table.alpha) +
                          " is below the minimum sum-rate");
  }
  RateVector r(k, 0);
  ClientSubset prefix = 0;
  long long prev = 0;
  for (int j : order) {
    prefix |= ClientSubset{1} << j;
    const long long cur = table.truncated[prefix];
    r[j] = static_cast<int>(cur - prev);
    prev = cur;
  }
  return r;
}

RateVector greedy_vertex(const Instance& inst, int alpha, const std::vector<int>& order) {
  return greedy_vertex(truncation_table(inst, alpha), order);
}

RateVector greedy_vertex(const Instance& inst, int alpha) {
  return greedy_vertex(inst, alpha, ascending_order(inst.num_clients));
}

int min_sum_rate(const Instance& inst) {
  const MissingTable missing = missing_table(inst);
  const ClientSubset full = missing.full();
  int lower = 0;
  for (ClientSubset s = 0; s < full; ++s) lower = std::max(lower, missing(s));

  // Sending every held packet in the clear is always enough, so the search
  // below this ceiling terminates.
  long long ceiling = 0;
  for (const auto& set : inst.has_sets) ceiling += static_cast<long long>(set.size());

  for (int alpha = lower; alpha <= ceiling; ++alpha) {
    const TruncationTable table = truncation_table(inst, alpha);
    if (table.truncated[full] != alpha) continue;
    const RateVector witness = greedy_vertex(table, ascending_order(inst.num_clients));
    if (!in_R_alpha(missing, alpha, witness)) {
      throw std::logic_error("greedy witness failed the feasibility check at alpha=" +
                             std::to_string(alpha));
    }
    return alpha;
  }
  throw std::logic_error("no feasible sum-rate up to the plain-broadcast ceiling");
}

SubmodularityReport check_submodularity(const TruncationTable& table) {
  const std::size_t size = table.truncated.size();
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = x + 1; y < size; ++y) {
      if (table.truncated[x] + table.truncated[y] <
          table.truncated[x | y] + table.truncated[x & y]) {
        return {false, static_cast<ClientSubset>(x), static_cast<ClientSubset>(y)};
      }
    }
  }
  return {};
}

}  // namespace cde
