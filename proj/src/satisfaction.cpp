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

#include "pb/satisfaction.hpp"

#include <limits>

namespace pb {

Cost evaluate(SatisfactionFn fn, const ApprovalSet& voter, const Budget& b, const Scenario& s) {
  switch (fn) {
    case SatisfactionFn::CountApproved: {
      Cost count = 0;
      for (int id : voter.approved) {
        if (b.contains(id)) ++count;
      }
      return count;
    }
    case SatisfactionFn::CoverIndicator: {
      for (int id : voter.approved) {
        if (b.contains(id)) return 1;
      }
      return 0;
    }
    case SatisfactionFn::CostApproved: {
      Cost sum = 0;
      for (int id : voter.approved) {
        if (b.contains(id)) sum += s.cost(id);
      }
      return sum;
    }
    case SatisfactionFn::MinApprovedCost: {
      Cost best = std::numeric_limits<Cost>::max();
      bool any = false;
      for (int id : voter.approved) {
        if (b.contains(id)) {
          any = true;
          if (s.cost(id) < best) best = s.cost(id);
        }
      }
      return any ? best : 0;
    }
  }
  throw InternalError("unknown satisfaction function");
}

Cost total_satisfaction(SatisfactionFn fn, const Scenario& s, const Budget& b) {
  Cost sum = 0;
  for (const ApprovalSet& voter : s.voters()) {
    sum += evaluate(fn, voter, b, s);
  }
  return sum;
}

bool superset_monotone(SatisfactionFn fn) {
  return fn != SatisfactionFn::MinApprovedCost;
}

std::string satisfaction_name(SatisfactionFn fn) {
  switch (fn) {
    case SatisfactionFn::CountApproved: return "count";
    case SatisfactionFn::CoverIndicator: return "cover";
    case SatisfactionFn::CostApproved: return "cost";
    case SatisfactionFn::MinApprovedCost: return "mincost";
  }
  throw InternalError("unknown satisfaction function");
}

std::optional<SatisfactionFn> satisfaction_from_name(const std::string& name) {
  if (name == "count") return SatisfactionFn::CountApproved;
  if (name == "cover") return SatisfactionFn::CoverIndicator;
  if (name == "cost") return SatisfactionFn::CostApproved;
  if (name == "mincost") return SatisfactionFn::MinApprovedCost;
  return std::nullopt;
}

}  // namespace pb
