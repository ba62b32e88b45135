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

#ifndef CDE_SUBSETS_HPP
#define CDE_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <string>

namespace cde {

// A subset of clients encoded as a bitmask: bit i (0-based) is client i+1.
// All subset tables in this library are indexed by this mask.
using ClientSubset = std::uint32_t;

inline int subset_size(ClientSubset s) { return std::popcount(s); }

inline bool subset_contains(ClientSubset s, int client) {
  return ((s >> client) & 1u) != 0;
}

inline ClientSubset full_subset(int num_clients) {
  return (ClientSubset{1} << num_clients) - 1u;
}

// Human-readable form with 1-based client ids, e.g. "{1,3}"; "{}" when empty.
inline std::string subset_to_string(ClientSubset s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; s >> i; ++i) {
    if (!subset_contains(s, i)) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace cde

#endif  // CDE_SUBSETS_HPP
