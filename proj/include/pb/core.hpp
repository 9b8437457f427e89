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
// Budgeting scenarios: items with integer costs, voters with approval sets,
// and a budget limit. Scenarios are immutable after construction; every
// operation on them is a pure function, so values can be shared freely
// between threads.

#ifndef PB_CORE_HPP
#define PB_CORE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pb/errors.hpp"

namespace pb {

using Cost = std::uint64_t;

struct Item {
  int id = 0;
  Cost cost = 1;  // >= 1
  bool operator==(const Item&) const = default;
};

struct ApprovalSet {
  int voter_id = 0;
  std::vector<int> approved;  // sorted ascending, no duplicates; may be empty
  bool operator==(const ApprovalSet&) const = default;
};

// A budgeting scenario: m items with positive integer costs, n voters with
// approval sets over item ids 0..m-1, and a non-negative budget limit.
class Scenario {
 public:
  Scenario() = default;
  // Throws Error if a cost is zero or an approved id is out of range.
  // Approval lists are normalized (sorted, deduplicated).
  Scenario(std::vector<Cost> costs, std::vector<std::vector<int>> approvals, Cost limit);

  int item_count() const { return static_cast<int>(items_.size()); }
  int voter_count() const { return static_cast<int>(voters_.size()); }
  Cost limit() const { return limit_; }
  Cost cost(int item) const { return items_[static_cast<std::size_t>(item)].cost; }
  const std::vector<int>& approved(int voter) const {
    return voters_[static_cast<std::size_t>(voter)].approved;
  }
  const std::vector<Item>& items() const { return items_; }
  const std::vector<ApprovalSet>& voters() const { return voters_; }
  Cost total_item_cost() const;

  bool operator==(const Scenario&) const = default;

 private:
  std::vector<Item> items_;
  std::vector<ApprovalSet> voters_;
  Cost limit_ = 0;
};

// A set of item ids with its cached total cost.
struct Budget {
  std::vector<int> members;  // sorted ascending
  Cost total_cost = 0;

  // Builds a budget from arbitrary ids (sorted + deduplicated); throws
  // MalformedBudgetError on ids outside the scenario.
  static Budget of(const Scenario& s, std::vector<int> ids);

  bool contains(int id) const;
  bool operator==(const Budget&) const = default;
};

enum class Approach { Max, Greedy, PropGreedy };

enum class SatisfactionFn {
  CountApproved,   // |A_v ∩ B|
  CoverIndicator,  // 1 if A_v ∩ B nonempty else 0
  CostApproved,    // c(A_v ∩ B)
  MinApprovedCost  // min cost in A_v ∩ B, 0 on empty intersection
};

// One of the framework's budgeting methods: an approach paired with a
// satisfaction function. The nine built-in rules are the 3x3 grid over
// {Max, Greedy, PropGreedy} x {CountApproved, CoverIndicator, CostApproved}.
struct RuleSpec {
  Approach approach = Approach::Max;
  SatisfactionFn satisfaction = SatisfactionFn::CountApproved;
  bool operator==(const RuleSpec&) const = default;
};

// The nine built-in rules, grouped by satisfaction function:
// count (m,g,p), cover (m,g,p), cost (m,g,p).
const std::vector<RuleSpec>& builtin_rules();

std::string approach_name(Approach a);
std::string rule_name(const RuleSpec& r);  // e.g. "max-count", "propgreedy-cost"

// True iff all member ids exist and their total cost is within the limit.
// Throws MalformedBudgetError on unknown ids.
bool feasibility_check(const Scenario& s, const Budget& b);

// Strict total order used to break ties between budgets of equal rule value:
// lower total cost first, then the colexicographic order of the member-id
// set (the id sequences compared from the largest element downwards; for
// subsets of {0..63} this coincides with the numeric order of the
// characteristic bitmasks).
bool colex_less(const std::vector<int>& a, const std::vector<int>& b);
bool canonical_less(const Budget& a, const Budget& b);

// Returns the canonical representative of a non-empty list of equal-value
// feasible budgets: the minimum under canonical_less. Deterministic under
// any permutation of the input. Throws InternalError on an empty list.
Budget canonical_tiebreak(const std::vector<Budget>& candidates);

// Canonical scenario text format (UTF-8, LF):
//   line 1:      m n limit
//   line 2:      the m item costs
//   lines 3..n+2: voter i's approved item ids, ascending; empty line = empty set
Scenario parse_scenario(std::string_view text);
std::string serialize_scenario(const Scenario& s);

}  // namespace pb

#endif  // PB_CORE_HPP
