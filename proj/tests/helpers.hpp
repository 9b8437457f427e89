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
//
// Test-only oracles and generators. The oracles enumerate subsets directly
// through total_satisfaction and never touch the solver implementations they
// are used to check.

#ifndef PB_TESTS_HELPERS_HPP
#define PB_TESTS_HELPERS_HPP

#include <cstdint>
#include <vector>

#include "pb/core.hpp"
#include "pb/rng.hpp"
#include "pb/satisfaction.hpp"

namespace pbtest {

inline pb::Scenario make(std::vector<pb::Cost> costs, std::vector<std::vector<int>> approvals,
                         pb::Cost limit) {
  return pb::Scenario(std::move(costs), std::move(approvals), limit);
}

inline pb::Budget budget_of(const pb::Scenario& s, std::vector<int> ids) {
  return pb::Budget::of(s, std::move(ids));
}

// Exhaustive optimal value, by direct subset enumeration.
inline pb::Cost oracle_max_value(const pb::Scenario& s, pb::SatisfactionFn fn) {
  int m = s.item_count();
  pb::Cost best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> ids;
    pb::Cost cost = 0;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        ids.push_back(i);
        cost += s.cost(i);
      }
    }
    if (cost > s.limit()) continue;
    pb::Cost value = pb::total_satisfaction(fn, s, pb::Budget{ids, cost});
    if (value > best) best = value;
  }
  return best;
}

// Exhaustive canonical optimum: masks ascend in colex order, so keeping the
// first subset per strictly-better (value, cost) pair yields the optimum
// that is minimal under (cost, colex).
inline pb::Budget oracle_canonical_optimum(const pb::Scenario& s, pb::SatisfactionFn fn) {
  int m = s.item_count();
  bool have = false;
  pb::Cost best_value = 0;
  pb::Budget best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> ids;
    pb::Cost cost = 0;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        ids.push_back(i);
        cost += s.cost(i);
      }
    }
    if (cost > s.limit()) continue;
    pb::Cost value = pb::total_satisfaction(fn, s, pb::Budget{ids, cost});
    if (!have || value > best_value || (value == best_value && cost < best.total_cost)) {
      have = true;
      best_value = value;
      best = pb::Budget{std::move(ids), cost};
    }
  }
  return best;
}

struct RandomScenarioParams {
  int max_items = 10;
  int max_voters = 8;
  pb::Cost max_cost = 10;
  pb::Cost max_limit = 0;  // 0: use the total item cost
  double approval_prob = 0.4;
};

inline pb::Scenario random_scenario(std::uint64_t seed, const RandomScenarioParams& p = {}) {
  pb::Rng rng(seed);
  int m = static_cast<int>(1 + rng.next_below(static_cast<std::uint64_t>(p.max_items)));
  int n = static_cast<int>(1 + rng.next_below(static_cast<std::uint64_t>(p.max_voters)));
  std::vector<pb::Cost> costs(static_cast<std::size_t>(m));
  pb::Cost total = 0;
  for (auto& c : costs) {
    c = 1 + rng.next_below(p.max_cost);
    total += c;
  }
  std::vector<std::vector<int>> approvals(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < m; ++i) {
      if (rng.next_double() < p.approval_prob) approvals[static_cast<std::size_t>(v)].push_back(i);
    }
  }
  pb::Cost cap = p.max_limit == 0 ? total : p.max_limit;
  pb::Cost limit = rng.next_below(cap + 1);
  return pb::Scenario(std::move(costs), std::move(approvals), limit);
}

}  // namespace pbtest

#endif  // PB_TESTS_HELPERS_HPP
