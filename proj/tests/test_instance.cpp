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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cde/errors.hpp"
#include "cde/instance.hpp"
#include "fixtures.hpp"

using namespace cde;
using namespace cde::testing;

TEST_CASE("parse accepts the sample instance") {
  const Instance inst = sample3x6();
  CHECK(inst.num_clients == 3);
  CHECK(inst.num_packets == 6);
  CHECK(inst.has_sets[0] == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(inst.has_sets[1] == std::vector<int>{1, 2, 6});
  CHECK(inst.has_sets[2] == std::vector<int>{3, 4, 6});
}

TEST_CASE("parse tolerates comments, blank lines and unsorted packet lists") {
  const Instance inst = parse_instance(
      "# a comment\n"
      "cde v1\n"
      "\n"
      "clients 2\n"
      "packets 3\n"
      "has 1: 3 1\n"
      "# another comment\n"
      "has 2: 2\n");
  CHECK(inst.has_sets[0] == std::vector<int>{1, 3});
  CHECK(inst.has_sets[1] == std::vector<int>{2});
}

TEST_CASE("a single complete client is a valid instance") {
  const Instance inst = parse_instance("cde v1\nclients 1\npackets 1\nhas 1: 1\n");
  CHECK(inst.num_clients == 1);
  CHECK(inst.owners(1) == 0b1u);
}

TEST_CASE("empty has-sets are allowed as long as the union covers") {
  const Instance inst =
      parse_instance("cde v1\nclients 2\npackets 2\nhas 1: 1 2\nhas 2:\n");
  CHECK(inst.has_sets[1].empty());
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_instance(""), ParseError);
  CHECK_THROWS_AS(parse_instance("cde v2\nclients 1\npackets 1\nhas 1: 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance("cde v1\nclients x\npackets 1\nhas 1: 1\n"),
                  ParseError);
  // packet index out of range
  CHECK_THROWS_AS(parse_instance("cde v1\nclients 1\npackets 1\nhas 1: 2\n"),
                  ParseError);
  // union-coverage violation: packet 2 is nowhere
  CHECK_THROWS_AS(
      parse_instance("cde v1\nclients 2\npackets 2\nhas 1: 1\nhas 2: 1\n"),
      ParseError);
  // duplicate client line
  CHECK_THROWS_AS(
      parse_instance("cde v1\nclients 2\npackets 1\nhas 1: 1\nhas 1: 1\n"),
      ParseError);
  // wrong number of has lines
  CHECK_THROWS_AS(parse_instance("cde v1\nclients 2\npackets 1\nhas 1: 1\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_instance("cde v1\nclients 1\npackets 1\nhas 1: 1\nhas 2: 1\n"),
      ParseError);
  // trailing garbage in a packet list
  CHECK_THROWS_AS(parse_instance("cde v1\nclients 1\npackets 1\nhas 1: 1 x\n"),
                  ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  const Instance inst = sample3x6();
  CHECK(parse_instance(serialize_instance(inst)) == inst);
  CHECK(serialize_instance(inst) == sample3x6_text());

  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Instance random = random_instance(seed, 4, 9);
    CHECK(parse_instance(serialize_instance(random)) == random);
  }
}

TEST_CASE("random_instance is deterministic and always covers") {
  const Instance a = random_instance(7, 3, 6);
  const Instance b = random_instance(7, 3, 6);
  CHECK(a == b);
  CHECK(random_instance(8, 3, 6) != a);

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = random_instance(seed, 3, 6);
    std::set<int> covered;
    for (const auto& set : inst.has_sets) covered.insert(set.begin(), set.end());
    CHECK(covered.size() == 6);
  }
}

TEST_CASE("random_instance rejects degenerate parameters") {
  CHECK_THROWS_AS(random_instance(1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(random_instance(1, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_instance(1, 99, 4), GuardError);
}

TEST_CASE("missing table matches direct set computation on the sample") {
  const MissingTable missing = missing_table(sample3x6());
  // Complements: client 1 misses {6}, client 2 misses {3,4,5},
  // client 3 misses {1,2,5}.
  CHECK(missing(0b000) == 0);
  CHECK(missing(0b001) == 1);  // {1}: packet 5 is missing at both 2 and 3
  CHECK(missing(0b010) == 0);  // {2}
  CHECK(missing(0b100) == 0);  // {3}
  CHECK(missing(0b011) == 3);  // {1,2}: client 3 misses 1,2,5
  CHECK(missing(0b101) == 3);  // {1,3}: client 2 misses 3,4,5
  CHECK(missing(0b110) == 1);  // {2,3}: client 1 misses 6
  CHECK(missing(0b111) == 0);  // convention for the full set
}

TEST_CASE("missing table on a two-client split") {
  const Instance inst =
      parse_instance("cde v1\nclients 2\npackets 2\nhas 1: 1\nhas 2: 2\n");
  const MissingTable missing = missing_table(inst);
  CHECK(missing(0b01) == 1);
  CHECK(missing(0b10) == 1);
  CHECK(missing(0b00) == 0);
  CHECK(missing(0b11) == 0);
}

TEST_CASE("missing table equals the naive oracle and is monotone") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int k = 2 + static_cast<int>(seed % 4);  // 2..5 clients
    const Instance inst = random_instance(seed, k, 8);
    const MissingTable missing = missing_table(inst);
    const ClientSubset full = full_subset(k);
    for (ClientSubset s = 0; s <= full; ++s) {
      CAPTURE(seed);
      CAPTURE(s);
      REQUIRE(missing(s) == naive_missing(inst, s));
      REQUIRE(missing(s) <= inst.num_packets);
      // Monotone: dropping one client from S cannot increase the value.
      for (int j = 0; j < k && s != full; ++j) {
        if (subset_contains(s, j)) {
          REQUIRE(missing(s ^ (ClientSubset{1} << j)) <= missing(s));
        }
      }
    }
  }
}

TEST_CASE("crossing-pair inequality holds on every missing table") {
  // For proper subsets X, Y with X∩Y nonempty and X∪Y proper:
  // missing(X) + missing(Y) <= missing(X∪Y) + missing(X∩Y).
  int instances = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const int k = 2 + static_cast<int>(seed % 5);  // 2..6 clients
    const Instance inst = random_instance(seed, k, 1 + seed % 10);
    const MissingTable missing = missing_table(inst);
    const ClientSubset full = full_subset(k);
    ++instances;
    for (ClientSubset x = 1; x < full; ++x) {
      for (ClientSubset y = 1; y < full; ++y) {
        if ((x & y) == 0 || (x | y) == full) continue;
        REQUIRE(missing(x) + missing(y) <= missing(x | y) + missing(x & y));
      }
    }
  }
  CHECK(instances >= 100);
}

TEST_CASE("owners and client_has agree with the has-sets") {
  const Instance inst = sample3x6();
  CHECK(inst.owners(1) == 0b011u);
  CHECK(inst.owners(5) == 0b001u);
  CHECK(inst.owners(6) == 0b110u);
  CHECK(inst.client_has(0, 5));
  CHECK(!inst.client_has(1, 5));
}
