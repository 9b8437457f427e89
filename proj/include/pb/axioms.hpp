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
// Monotonicity axioms for budgeting rules, perturbation operators, built-in
// counterexample fixtures, and the audit that reproduces the reference
// outcome matrix for the nine built-in rules.
//
// Check semantics. Iterative rules are deterministic procedures, so their
// checks compare the canonical runs directly. Max rules are defined through
// an argmax, so their checks work on the full set of optimal budgets
// ("item b is budgeted" = b lies in some optimum); this avoids verdicts
// that hinge on the artifact's own tie-breaking. Two fixture cells
// (discount/prop-cost and merging/greedy-count) cannot be violated under any
// fixed deterministic tie order; their fixtures certify the violation by
// enumerating all tie-break runs and exhibiting one that budgets the item
// before the perturbation and one that drops it afterwards. Witnesses record
// which semantics produced them.

#ifndef PB_AXIOMS_HPP
#define PB_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pb/core.hpp"
#include "pb/solvers.hpp"

namespace pb {

enum class Axiom {
  BudgetMono,
  LimitMono,
  DiscountMono,
  SplittingMono,
  StrongSplittingMono,
  MergingMono,
};

std::string axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);

struct Witness {
  Scenario before;
  Scenario after;
  Budget winner_before;
  Budget winner_after;
  std::string perturbation;  // e.g. "limit 6 -> 7"
  std::string semantics;     // "canonical", "optimum-set" or "tie-dependent"
};

struct AxiomVerdict {
  RuleSpec rule;
  Axiom axiom = Axiom::BudgetMono;
  bool violated = false;
  long trials = 0;  // random perturbation tests behind a clean verdict
  std::optional<Witness> witness;
};

// All optimal budgets of a Max rule, by exhaustive enumeration (small
// instances only; throws ResourceLimitError beyond 20 items).
struct OptimumSet {
  Cost value = 0;
  std::vector<Budget> budgets;
  bool item_in_any(int id) const;
  bool superset_in_any(const std::vector<int>& ids) const;
  bool intersects_any(const std::vector<int>& ids) const;
};
OptimumSet enumerate_optima(const Scenario& s, SatisfactionFn fn);

// All budgets an iterative rule can produce over the admissible tie-break
// orders (bounded enumeration; throws ResourceLimitError past max_paths).
std::vector<Budget> iterative_outcomes(const Scenario& s, SatisfactionFn fn, bool proportional,
                                       const GreedyOptions& opts = {}, int max_paths = 4096);

// Winner maximality / no value-decreasing superset extension.
AxiomVerdict check_budget_mono(const RuleSpec& rule, const Scenario& s);

// Re-solves with limit+1; requires that no item costs exactly limit+1
// (the verdict is clean with trials = 0 when one does).
AxiomVerdict check_limit_mono(const RuleSpec& rule, const Scenario& s);

// Re-solves with cost(item) lowered by one. The item must be budgeted and
// cost at least 2 (InvalidPerturbationError otherwise).
AxiomVerdict check_discount_mono(const RuleSpec& rule, const Scenario& s, int item);

struct SplitResult {
  Scenario scenario;
  std::vector<int> parts;  // ids of the replacement items in the new scenario
};
// Replaces `item` by one item per entry of `parts` (costs must sum to the
// original cost); approvers of the original approve every part.
SplitResult apply_split(const Scenario& s, int item, const std::vector<Cost>& parts);

AxiomVerdict check_splitting_mono(const RuleSpec& rule, const Scenario& s, int item,
                                  const std::vector<Cost>& parts, bool strong = false);

struct MergeResult {
  Scenario scenario;
  int merged_item;  // id of the merged item in the new scenario
};
// Replaces `items` by a single item of summed cost at the position of the
// smallest merged id. Every voter must approve either all of `items` or
// none of them (InvalidPerturbationError otherwise).
MergeResult apply_merge(const Scenario& s, const std::vector<int>& items);

AxiomVerdict check_merging_mono(const RuleSpec& rule, const Scenario& s,
                                const std::vector<int>& items);

// The five audited axioms, in display order.
const std::vector<Axiom>& audit_axioms();

// Reference outcome for (rule, axiom): true = satisfied, false = violated.
bool expected_outcome(const RuleSpec& rule, Axiom axiom);

// Deterministic counterexample for an expected-violation cell.
AxiomVerdict run_fixture(const RuleSpec& rule, Axiom axiom);

// Seeded random perturbation search for an expected-clean cell.
AxiomVerdict random_search(const RuleSpec& rule, Axiom axiom, long trials, std::uint64_t seed);

struct AuditCell {
  AxiomVerdict verdict;
  bool expected_violation = false;
  bool run = false;  // false when excluded by a rule/axiom filter
  bool matches() const { return !run || verdict.violated == expected_violation; }
};

struct AuditReport {
  long trials = 0;
  std::uint64_t seed = 0;
  // Indexed [rule][axiom] following builtin_rules() and audit_axioms().
  std::vector<std::vector<AuditCell>> cells;
  bool matches_expected() const;
};

// Runs fixtures on expected-violation cells and `trials` random tests on
// expected-clean cells, optionally restricted to one rule and/or one axiom.
AuditReport audit_matrix(long trials, std::uint64_t seed,
                         const std::optional<RuleSpec>& only_rule = std::nullopt,
                         const std::optional<Axiom>& only_axiom = std::nullopt);

// Documented random scenario model used by the audit search: 2..10 items of
// cost 1..10, 1..8 voters approving each item with probability 0.4, and a
// limit drawn from [1, total item cost].
Scenario random_audit_scenario(std::uint64_t seed);

}  // namespace pb

#endif  // PB_AXIOMS_HPP
