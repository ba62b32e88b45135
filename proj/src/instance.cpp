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

#include "cde/instance.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cde/errors.hpp"

namespace cde {

namespace {

constexpr char kMagic[] = "cde v1";

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Content lines of the instance format: comments and blank lines dropped.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

int parse_count_line(const std::string& line, const std::string& keyword) {
  std::istringstream in(line);
  std::string word;
  long value = 0;
  if (!(in >> word >> value) || word != keyword || !(in >> std::ws).eof()) {
    throw ParseError("expected '" + keyword + " <count>', got '" + line + "'");
  }
  if (value < 1 || value > 1000000) {
    throw ParseError("'" + keyword + "' count out of range: " + line);
  }
  return static_cast<int>(value);
}

}  // namespace

int max_clients() {
  int cap = kDefaultMaxClients;
  if (const char* env = std::getenv("CDE_MAX_K"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      cap = static_cast<int>(std::min<long>(v, kMaxClientsCeiling));
    }
  }
  return cap;
}

bool Instance::client_has(int client, int packet) const {
  const auto& set = has_sets[client];
  return std::binary_search(set.begin(), set.end(), packet);
}

ClientSubset Instance::owners(int packet) const {
  ClientSubset mask = 0;
  for (int j = 0; j < num_clients; ++j) {
    if (client_has(j, packet)) mask |= ClientSubset{1} << j;
  }
  return mask;
}

void validate(const Instance& inst) {
  if (inst.num_clients < 1) throw std::invalid_argument("need at least one client");
  if (inst.num_clients > max_clients()) {
    throw std::invalid_argument("client count " + std::to_string(inst.num_clients) +
                                " exceeds the cap of " + std::to_string(max_clients()));
  }
  if (inst.num_packets < 1) throw std::invalid_argument("need at least one packet");
  if (static_cast<int>(inst.has_sets.size()) != inst.num_clients) {
    throw std::invalid_argument("has-set count does not match the client count");
  }
  std::vector<bool> covered(inst.num_packets, false);
  for (const auto& set : inst.has_sets) {
    int prev = 0;
    for (int p : set) {
      if (p < 1 || p > inst.num_packets) {
        throw std::invalid_argument("packet index out of range: " + std::to_string(p));
      }
      if (p <= prev) throw std::invalid_argument("has-set not sorted or has duplicates");
      covered[p - 1] = true;
      prev = p;
    }
  }
  for (int p = 1; p <= inst.num_packets; ++p) {
    if (!covered[p - 1]) {
      throw std::invalid_argument("packet " + std::to_string(p) +
                                  " is not held by any client");
    }
  }
}

Instance parse_instance(const std::string& text) {
  const std::vector<std::string> lines = content_lines(text);
  if (lines.empty() || lines[0] != kMagic) {
    throw ParseError(std::string("missing '") + kMagic + "' header line");
  }
  if (lines.size() < 3) throw ParseError("truncated instance file");

  Instance inst;
  inst.num_clients = parse_count_line(lines[1], "clients");
  inst.num_packets = parse_count_line(lines[2], "packets");
  if (lines.size() != static_cast<std::size_t>(3 + inst.num_clients)) {
    throw ParseError("expected exactly " + std::to_string(inst.num_clients) +
                     " 'has' lines");
  }

  inst.has_sets.resize(inst.num_clients);
  for (int j = 1; j <= inst.num_clients; ++j) {
    const std::string& line = lines[2 + j];
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("missing ':' in '" + line + "'");

    std::istringstream head(line.substr(0, colon));
    std::string word;
    long id = 0;
    if (!(head >> word >> id) || word != "has" || !(head >> std::ws).eof()) {
      throw ParseError("expected 'has <client>:', got '" + line + "'");
    }
    if (id == j - 1) throw ParseError("duplicate client line for client " + std::to_string(id));
    if (id != j) {
      throw ParseError("client lines must be ascending; expected client " +
                       std::to_string(j) + ", got " + std::to_string(id));
    }

    std::istringstream tail(line.substr(colon + 1));
    std::vector<int>& set = inst.has_sets[j - 1];
    long p = 0;
    while (tail >> p) {
      if (p < 1 || p > inst.num_packets) {
        throw ParseError("packet index out of range for client " + std::to_string(j) +
                         ": " + std::to_string(p));
      }
      set.push_back(static_cast<int>(p));
    }
    if (!tail.eof()) throw ParseError("malformed packet list in '" + line + "'");
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }

  try {
    validate(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << kMagic << '\n';
  out << "clients " << inst.num_clients << '\n';
  out << "packets " << inst.num_packets << '\n';
  for (int j = 0; j < inst.num_clients; ++j) {
    out << "has " << (j + 1) << ':';
    for (int p : inst.has_sets[j]) out << ' ' << p;
    out << '\n';
  }
  return out.str();
}

Instance random_instance(std::uint64_t seed, int num_clients, int num_packets) {
  if (num_clients < 2) {
    throw std::invalid_argument("random_instance needs at least two clients");
  }
  if (num_clients > max_clients()) {
    throw GuardError("client count " + std::to_string(num_clients) +
                     " exceeds the cap of " + std::to_string(max_clients()));
  }
  if (num_packets < 1) throw std::invalid_argument("need at least one packet");

  std::mt19937_64 rng(seed);
  const std::uint64_t full = (std::uint64_t{1} << num_clients) - 1;
  std::vector<ClientSubset> owner(num_packets);
  bool all_full = true;
  for (int p = 0; p < num_packets; ++p) {
    owner[p] = static_cast<ClientSubset>(1 + rng() % full);
    all_full = all_full && owner[p] == full;
  }
  if (all_full) {
    // Nothing to exchange; move the last packet onto a proper subset.
    owner[num_packets - 1] = static_cast<ClientSubset>(1 + rng() % (full - 1));
  }

  Instance inst;
  inst.num_clients = num_clients;
  inst.num_packets = num_packets;
  inst.has_sets.resize(num_clients);
  for (int p = 0; p < num_packets; ++p) {
    for (int j = 0; j < num_clients; ++j) {
      if (subset_contains(owner[p], j)) inst.has_sets[j].push_back(p + 1);
    }
  }
  validate(inst);
  return inst;
}

MissingTable::MissingTable(int num_clients, std::vector<int> values)
    : num_clients_(num_clients), values_(std::move(values)) {
  if (values_.size() != std::size_t{1} << num_clients_) {
    throw std::invalid_argument("missing table size must be 2^K");
  }
}

MissingTable missing_table(const Instance& inst) {
  validate(inst);
  const int k = inst.num_clients;
  const std::size_t size = std::size_t{1} << k;

  // missing(S) counts the packets whose owner set is contained in S: exactly
  // the packets missing at every client outside S. Bucket packets by owner
  // mask, then sum over subsets.
  std::vector<int> table(size, 0);
  for (int p = 1; p <= inst.num_packets; ++p) table[inst.owners(p)] += 1;
  for (int bit = 0; bit < k; ++bit) {
    for (std::size_t s = 0; s < size; ++s) {
      if (s & (std::size_t{1} << bit)) table[s] += table[s ^ (std::size_t{1} << bit)];
    }
  }
  table[size - 1] = 0;  // convention for S = C
  return MissingTable(k, std::move(table));
}

}  // namespace cde
