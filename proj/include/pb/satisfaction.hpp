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
// Satisfaction functions f(A_v, B). All built-in functions depend only on
// the intersection A_v ∩ B and the item costs, and are pure.

#ifndef PB_SATISFACTION_HPP
#define PB_SATISFACTION_HPP

#include <optional>
#include <string>

#include "pb/core.hpp"

namespace pb {

// Voter v's satisfaction from budget b:
//   CountApproved   -> |A_v ∩ B|
//   CoverIndicator  -> 1 if A_v ∩ B nonempty else 0
//   CostApproved    -> total cost of A_v ∩ B
//   MinApprovedCost -> cost of the cheapest item in A_v ∩ B, 0 when empty
Cost evaluate(SatisfactionFn fn, const ApprovalSet& voter, const Budget& b, const Scenario& s);

// Sum of evaluate over all voters.
Cost total_satisfaction(SatisfactionFn fn, const Scenario& s, const Budget& b);

// Whether f(A_v, B) <= f(A_v, B') for all B ⊆ B'. Iterative solvers require
// this; MinApprovedCost is the one built-in function without it. New
// satisfaction functions must declare their monotonicity the same way so
// solvers can reject incompatible pairings.
bool superset_monotone(SatisfactionFn fn);

std::string satisfaction_name(SatisfactionFn fn);  // count, cover, cost, mincost
std::optional<SatisfactionFn> satisfaction_from_name(const std::string& name);

}  // namespace pb

#endif  // PB_SATISFACTION_HPP
