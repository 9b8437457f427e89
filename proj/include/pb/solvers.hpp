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
// Winning-budget computation for all nine rules. Exact Max solvers agree on
// the optimal value on every input, and return the same budget: the optimum
// that is minimal under canonical_less (lowest cost, then colex order).
// Iterative rules are deterministic with per-item ties broken by lowest id.

#ifndef PB_SOLVERS_HPP
#define PB_SOLVERS_HPP

#include <vector>

#include "pb/core.hpp"
#include "pb/satisfaction.hpp"

namespace pb {

struct TraceEntry {
  int item = 0;
  Cost gain = 0;  // marginal increase of total satisfaction when the item was added
  bool operator==(const TraceEntry&) const = default;
};

struct SolveResult {
  Budget budget;
  Cost value = 0;  // total_satisfaction(fn, scenario, budget)
  std::vector<TraceEntry> trace;  // selection order for iterative rules; empty for exact rules
  bool operator==(const SolveResult&) const = default;
};

enum class ExactStrategy { BruteForce, BranchAndBound, SpecializedDP, FptVoters };

struct SolverCaps {
  int brute_force_max_items = 24;
  Cost cost_dp_limit = 1'000'000;   // pseudopolynomial cap on the budget limit
  int fpt_max_voters = 20;
  // Guard on DP table allocations (cells), independent of the caps above.
  std::size_t max_table_cells = 400'000'000;
};

struct GreedyOptions {
  // When set, iterative rules stop once no affordable item has a positive
  // marginal gain, instead of running to maximality. Experiment runs enable
  // this; the library default keeps maximal budgets.
  bool positive_gain_only = false;
};

// Iterative rules. Require a superset-monotone satisfaction function
// (UnsupportedPairingError otherwise). Each iteration adds the affordable
// unselected item with the best marginal gain (greedy) or gain/cost ratio
// (proportional greedy, compared exactly by cross-multiplication); ties go
// to the lowest item id; the loop runs until no remaining item fits.
SolveResult solve_greedy(const Scenario& s, SatisfactionFn fn, const GreedyOptions& opts = {});
SolveResult solve_prop_greedy(const Scenario& s, SatisfactionFn fn, const GreedyOptions& opts = {});

// Exact Max solver. Strategy compatibility:
//   BruteForce     any satisfaction function, item count capped
//   BranchAndBound CountApproved, CoverIndicator, CostApproved
//   SpecializedDP  CountApproved or CostApproved
//   FptVoters      CoverIndicator, voter count capped
SolveResult solve_max_exact(const Scenario& s, SatisfactionFn fn, ExactStrategy strategy,
                            const SolverCaps& caps = {});

// Min-cost-per-satisfaction-level dynamic program for CountApproved, over
// satisfaction levels 0..n*m.
SolveResult solve_max_count_dp(const Scenario& s, const SolverCaps& caps = {});

// Knapsack-style dynamic program for CostApproved over spend levels 0..limit,
// where an item contributes cost(a) * (number of approvers). Rejects limits
// beyond caps.cost_dp_limit with a hint to use the FPTAS.
SolveResult solve_max_cost_dp(const Scenario& s, const SolverCaps& caps = {});

// Value-scaling FPTAS for CostApproved: returns a feasible budget whose value
// is at least (1-epsilon) times the optimum. epsilon must be in (0,1).
SolveResult solve_max_cost_fptas(const Scenario& s, double epsilon);

// Voter-subset dynamic program for CoverIndicator: dp[S] = minimum cost of an
// item set whose approvers cover at least the voter set S; the answer is the
// largest |S| with dp[S] within the limit. Fixed-parameter in the voter count.
SolveResult solve_max_cover_fpt_voters(const Scenario& s, const SolverCaps& caps = {});

// Convenience dispatcher used by the audit harness, experiments and CLI.
// Max rules pick a suitable exact strategy for the satisfaction function
// (specialized DP for count/cost, branch and bound for cover, brute force
// for anything else).
SolveResult solve_rule(const Scenario& s, const RuleSpec& rule, const GreedyOptions& opts = {},
                       const SolverCaps& caps = {});

}  // namespace pb

#endif  // PB_SOLVERS_HPP
