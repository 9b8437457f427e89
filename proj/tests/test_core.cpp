// Copyright 2026 The pb Authors
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

#include "doctest.h"
#include "helpers.hpp"
#include "pb/core.hpp"

using namespace pb;
using pbtest::make;

TEST_CASE("feasibility check") {
  Scenario s = make({1, 2}, {{0, 1}}, 2);
  CHECK_FALSE(feasibility_check(s, Budget::of(s, {0, 1})));

  Scenario s3 = make({1, 2}, {{0, 1}}, 3);
  CHECK(feasibility_check(s3, Budget::of(s3, {0, 1})));

  Scenario s4 = make({2, 3, 3, 5}, {{0, 1, 2, 3}}, 6);
  CHECK(feasibility_check(s4, Budget::of(s4, {1, 2})));

  CHECK_THROWS_AS(feasibility_check(s4, Budget{{7}, 0}), MalformedBudgetError);
  CHECK_THROWS_AS((void)Budget::of(s4, {4}), MalformedBudgetError);
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(make({0}, {{}}, 1), Error);
  CHECK_THROWS_AS(make({1}, {{3}}, 1), Error);
  // approvals normalized: order and duplicates do not matter
  Scenario s = make({1, 1, 1}, {{2, 0, 2}}, 1);
  CHECK(s.approved(0) == std::vector<int>{0, 2});
}

TEST_CASE("canonical tie-break") {
  Scenario s = make({1, 3, 2}, {{0, 1, 2}}, 10);
  // equal costs 3: {1} precedes {0,2} in colex order
  Budget a = Budget::of(s, {0, 2});
  Budget b = Budget::of(s, {1});
  CHECK(a.total_cost == 3);
  CHECK(b.total_cost == 3);
  CHECK(canonical_tiebreak({a, b}) == b);
  CHECK(canonical_tiebreak({b, a}) == b);

  CHECK(canonical_tiebreak({Budget::of(s, {0})}) == Budget::of(s, {0}));

  // cheaper wins before any ordering on ids
  Scenario t = make({1, 2}, {{0, 1}}, 10);
  CHECK(canonical_tiebreak({Budget::of(t, {1}), Budget::of(t, {0})}) == Budget::of(t, {0}));

  CHECK_THROWS_AS(canonical_tiebreak({}), InternalError);
}

TEST_CASE("canonical tie-break is permutation invariant") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Scenario s = pbtest::random_scenario(seed);
    Rng rng(seed * 977 + 5);
    std::vector<Budget> candidates;
    for (int k = 0; k < 6; ++k) {
      std::vector<int> ids;
      for (int i = 0; i < s.item_count(); ++i) {
        if (rng.next_double() < 0.5) ids.push_back(i);
      }
      candidates.push_back(Budget::of(s, ids));
    }
    Budget first = canonical_tiebreak(candidates);
    std::reverse(candidates.begin(), candidates.end());
    CHECK(canonical_tiebreak(candidates) == first);
  }
}

TEST_CASE("colex order") {
  CHECK(colex_less({1}, {0, 2}));
  CHECK_FALSE(colex_less({0, 2}, {1}));
  CHECK(colex_less({}, {0}));
  CHECK(colex_less({0, 1}, {2}));
  CHECK_FALSE(colex_less({0, 1}, {0, 1}));
}

TEST_CASE("parse scenario") {
  Scenario s = parse_scenario("2 1 3\n1 2\n0 1\n");
  CHECK(s.item_count() == 2);
  CHECK(s.voter_count() == 1);
  CHECK(s.limit() == 3);
  CHECK(s.cost(0) == 1);
  CHECK(s.cost(1) == 2);
  CHECK(s.approved(0) == std::vector<int>{0, 1});

  Scenario four = parse_scenario("3 4 1\n1 1 1\n0\n0 1\n1 2\n2\n");
  CHECK(four.item_count() == 3);
  CHECK(four.voter_count() == 4);
  CHECK(four.approved(1) == std::vector<int>{0, 1});
  CHECK(four.approved(3) == std::vector<int>{2});

  Scenario zero = parse_scenario("1 1 0\n5\n0\n");
  CHECK(zero.limit() == 0);
  CHECK(zero.cost(0) == 5);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS((void)parse_scenario(""), ParseError);
  try {
    (void)parse_scenario("2 1 3\n1\n0\n");  // one cost missing
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    (void)parse_scenario("2 1 3\n1 0\n0\n");  // zero cost
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    (void)parse_scenario("2 1 3\n1 2\n0 2\n");  // item id out of range
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    (void)parse_scenario("2 x 3\n1 2\n0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS((void)parse_scenario("2 2 3\n1 2\n0\n"), ParseError);   // missing voter line
  CHECK_THROWS_AS((void)parse_scenario("2 1 3\n1 2\n0\n1\n"), ParseError);  // extra content
}

TEST_CASE("serialize scenario") {
  CHECK(serialize_scenario(make({4, 7}, {}, 9)) == "2 0 9\n4 7\n");
  CHECK(serialize_scenario(make({5}, {{0}}, 3)) == "1 1 3\n5\n0\n");
  // empty approval set encodes as an empty line
  CHECK(serialize_scenario(make({5}, {{}}, 3)) == "1 1 3\n5\n\n");
  Scenario back = parse_scenario("1 1 3\n5\n\n");
  CHECK(back.approved(0).empty());
}

TEST_CASE("parse and serialize round-trip") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Scenario s = pbtest::random_scenario(seed);
    std::string text = serialize_scenario(s);
    Scenario t = parse_scenario(text);
    CHECK(t == s);
    CHECK(serialize_scenario(t) == text);
  }
}

TEST_CASE("rule names") {
  CHECK(builtin_rules().size() == 9);
  CHECK(rule_name(RuleSpec{Approach::Max, SatisfactionFn::CountApproved}) == "max-count");
  CHECK(rule_name(RuleSpec{Approach::PropGreedy, SatisfactionFn::CostApproved}) ==
        "propgreedy-cost");
}
