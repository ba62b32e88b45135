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

#ifndef CDE_INSTANCE_HPP
#define CDE_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cde/subsets.hpp"

namespace cde {

// Every subset table has 2^K entries, so the client count is capped. The
// default cap can be overridden (up to the hard ceiling) with the CDE_MAX_K
// environment variable.
inline constexpr int kDefaultMaxClients = 16;
inline constexpr int kMaxClientsCeiling = 24;
int max_clients();

// A cooperative-exchange instance: K clients, N packets, and each client's
// has-set (the packets it starts with). Packet ids are 1-based everywhere.
struct Instance {
  int num_clients = 0;
  int num_packets = 0;
  std::vector<std::vector<int>> has_sets;  // per client, sorted and unique

  bool client_has(int client, int packet) const;
  // Bitmask of the clients holding `packet`.
  ClientSubset owners(int packet) const;

  bool operator==(const Instance&) const = default;
};

// Checks counts, ranges, sortedness and union coverage (every packet must be
// held by at least one client). Throws std::invalid_argument on violation.
void validate(const Instance& inst);

// Line-based text format:
//   cde v1
//   clients K
//   packets N
//   has j: i1 i2 ...     (one line per client, j ascending from 1)
// Lines starting with '#' and blank lines are ignored. Throws ParseError.
Instance parse_instance(const std::string& text);
Instance read_instance_file(const std::string& path);

// Emits the canonical form of the format above (sorted indices, LF endings).
// parse_instance(serialize_instance(x)) == x for every valid x.
std::string serialize_instance(const Instance& inst);

// Deterministic pseudo-random instance: each packet is assigned to a
// uniformly random nonempty client subset, which guarantees union coverage.
// Should the draw give every packet to every client, the last packet is
// redrawn over the proper nonempty subsets so that something is left to
// exchange. Requires num_clients >= 2.
Instance random_instance(std::uint64_t seed, int num_clients, int num_packets);

// missing(S) = number of packets that no client outside S holds, i.e. the
// packets the clients outside S are collectively missing. These are the
// right-hand sides of all feasibility constraints. missing(C) is defined
// as 0 (the intersection over an empty family of clients is taken empty).
class MissingTable {
 public:
  MissingTable(int num_clients, std::vector<int> values);

  int num_clients() const { return num_clients_; }
  ClientSubset full() const { return full_subset(num_clients_); }
  int operator()(ClientSubset s) const { return values_[s]; }

 private:
  int num_clients_;
  std::vector<int> values_;  // indexed by subset mask, size 2^K
};

MissingTable missing_table(const Instance& inst);

}  // namespace cde

#endif  // CDE_INSTANCE_HPP
