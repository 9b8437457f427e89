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

#include "pb/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

namespace pb {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max();

using u128 = unsigned __int128;

// Per-item data shared by the solvers.
struct Instance {
  int m = 0;
  int n = 0;
  Cost limit = 0;
  std::vector<Cost> cost;
  std::vector<std::vector<int>> approvers;  // item -> approving voters
  std::vector<Cost> approver_count;

  explicit Instance(const Scenario& s)
      : m(s.item_count()), n(s.voter_count()), limit(s.limit()) {
    cost.resize(static_cast<std::size_t>(m));
    approvers.resize(static_cast<std::size_t>(m));
    approver_count.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) cost[static_cast<std::size_t>(i)] = s.cost(i);
    for (int v = 0; v < n; ++v) {
      for (int id : s.approved(v)) {
        approvers[static_cast<std::size_t>(id)].push_back(v);
        ++approver_count[static_cast<std::size_t>(id)];
      }
    }
  }

  // Additive per-item weight of the total satisfaction, valid for
  // CountApproved and CostApproved (both are sums of independent item terms).
  Cost additive_weight(SatisfactionFn fn, int item) const {
    auto i = static_cast<std::size_t>(item);
    if (fn == SatisfactionFn::CountApproved) return approver_count[i];
    return cost[i] * approver_count[i];
  }
};

SolveResult finish(const Scenario& s, SatisfactionFn fn, std::vector<int> members,
                   std::vector<TraceEntry> trace = {}) {
  Budget b = Budget::of(s, std::move(members));
  Cost value = total_satisfaction(fn, s, b);
  return SolveResult{std::move(b), value, std::move(trace)};
}

// ---------------------------------------------------------------------------
// Iterative rules

SolveResult run_iterative(const Scenario& s, SatisfactionFn fn, bool proportional,
                          const GreedyOptions& opts) {
  if (!superset_monotone(fn)) {
    throw UnsupportedPairingError("iterative rules require a superset-monotone satisfaction "
                                  "function; '" + satisfaction_name(fn) + "' is not");
  }
  Instance inst(s);
  std::vector<char> selected(static_cast<std::size_t>(inst.m), 0);
  std::vector<char> covered(static_cast<std::size_t>(inst.n), 0);
  Cost residual = inst.limit;
  std::vector<int> chosen;
  std::vector<TraceEntry> trace;

  auto marginal_gain = [&](int a) -> Cost {
    auto ia = static_cast<std::size_t>(a);
    switch (fn) {
      case SatisfactionFn::CountApproved: return inst.approver_count[ia];
      case SatisfactionFn::CostApproved: return inst.cost[ia] * inst.approver_count[ia];
      case SatisfactionFn::CoverIndicator: {
        Cost gain = 0;
        for (int v : inst.approvers[ia]) {
          if (!covered[static_cast<std::size_t>(v)]) ++gain;
        }
        return gain;
      }
      default: throw InternalError("non-monotone function in iterative solver");
    }
  };

  for (;;) {
    int best = -1;
    Cost best_gain = 0;
    for (int a = 0; a < inst.m; ++a) {
      auto ia = static_cast<std::size_t>(a);
      if (selected[ia] || inst.cost[ia] > residual) continue;
      Cost gain = marginal_gain(a);
      if (opts.positive_gain_only && gain == 0) continue;
      if (best < 0) {
        best = a;
        best_gain = gain;
        continue;
      }
      bool better;
      if (proportional) {
        // gain/cost(a) > best_gain/cost(best), compared exactly.
        better = static_cast<u128>(gain) * inst.cost[static_cast<std::size_t>(best)] >
                 static_cast<u128>(best_gain) * inst.cost[ia];
      } else {
        better = gain > best_gain;
      }
      if (better) {
        best = a;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    auto ib = static_cast<std::size_t>(best);
    selected[ib] = 1;
    residual -= inst.cost[ib];
    chosen.push_back(best);
    trace.push_back(TraceEntry{best, best_gain});
    if (fn == SatisfactionFn::CoverIndicator) {
      for (int v : inst.approvers[ib]) covered[static_cast<std::size_t>(v)] = 1;
    }
  }
  return finish(s, fn, std::move(chosen), std::move(trace));
}

// ---------------------------------------------------------------------------
// Canonical incumbent shared by the exhaustive searches.
//
// The searches enumerate subsets in colexicographic order (equivalently,
// ascending order of the characteristic bitmask: items are decided from the
// highest id downwards with the exclude branch first). The incumbent is
// replaced only on a strict improvement of (value, then lower cost), so at
// equal value and cost the first-found subset wins, which is exactly the
// colex-minimal one. The final incumbent is therefore the canonical optimum.
struct Incumbent {
  Cost value = 0;
  Cost cost = kInf;
  std::vector<int> members;
  bool real = false;  // false while holding only a seed bound

  // Returns true if (v, c) strictly improves on the incumbent.
  bool improves(Cost v, Cost c) const {
    return v > value || (v == value && c < cost);
  }
  void offer(Cost v, Cost c, const std::vector<int>& chosen) {
    if (improves(v, c)) {
      value = v;
      cost = c;
      members = chosen;
      std::sort(members.begin(), members.end());
      real = true;
    }
  }
};

// ---------------------------------------------------------------------------
// Brute force: full enumeration, any satisfaction function.

SolveResult brute_force(const Scenario& s, SatisfactionFn fn, const SolverCaps& caps) {
  Instance inst(s);
  if (inst.m > caps.brute_force_max_items) {
    throw ResourceLimitError("brute force capped at " +
                             std::to_string(caps.brute_force_max_items) + " items (got " +
                             std::to_string(inst.m) + ")");
  }
  Incumbent best;
  std::vector<int> chosen;
  std::vector<int> voter_hits(static_cast<std::size_t>(inst.n), 0);
  Cost cur_value = 0;  // maintained for count/cover/cost
  Cost cur_cost = 0;
  std::vector<char> selected(static_cast<std::size_t>(inst.m), 0);

  auto mincost_value = [&]() -> Cost {
    Cost total = 0;
    for (int v = 0; v < inst.n; ++v) {
      Cost m = kInf;
      for (int id : s.approved(v)) {
        if (selected[static_cast<std::size_t>(id)] && s.cost(id) < m) m = s.cost(id);
      }
      if (m != kInf) total += m;
    }
    return total;
  };

  auto apply = [&](int a, int dir) {
    auto ia = static_cast<std::size_t>(a);
    selected[ia] = dir > 0;
    switch (fn) {
      case SatisfactionFn::CountApproved:
        cur_value += static_cast<Cost>(dir) * inst.approver_count[ia];
        break;
      case SatisfactionFn::CostApproved:
        cur_value += static_cast<Cost>(dir) * inst.cost[ia] * inst.approver_count[ia];
        break;
      case SatisfactionFn::CoverIndicator:
        for (int v : inst.approvers[ia]) {
          auto iv = static_cast<std::size_t>(v);
          voter_hits[iv] += dir;
          if (dir > 0 && voter_hits[iv] == 1) ++cur_value;
          if (dir < 0 && voter_hits[iv] == 0) --cur_value;
        }
        break;
      case SatisfactionFn::MinApprovedCost:
        break;  // recomputed per candidate
    }
  };

  auto offer = [&]() {
    Cost v = (fn == SatisfactionFn::MinApprovedCost) ? mincost_value() : cur_value;
    best.offer(v, cur_cost, chosen);
  };

  offer();  // the empty budget
  auto dfs = [&](auto&& self, int i) -> void {
    if (i < 0) return;
    self(self, i - 1);  // exclude item i first: enumeration stays colex-ascending
    auto ia = static_cast<std::size_t>(i);
    if (cur_cost + inst.cost[ia] <= inst.limit) {
      cur_cost += inst.cost[ia];
      chosen.push_back(i);
      apply(i, +1);
      offer();
      self(self, i - 1);
      apply(i, -1);
      chosen.pop_back();
      cur_cost -= inst.cost[ia];
    }
  };
  dfs(dfs, inst.m - 1);
  return finish(s, fn, std::move(best.members));
}

// ---------------------------------------------------------------------------
// Branch and bound over the 0/1 selection variables with the budget
// constraint; additive objective for count/cost, coverage objective for the
// indicator. LP-free bounds: fractional knapsack over item weights
// (respectively marginal coverages) plus a coverage union bound.

struct DensityOrder {
  // Item ids sorted by weight/cost descending (cross-multiplied), zero
  // weights last; used for fractional bounds.
  std::vector<int> order;

  DensityOrder(const std::vector<Cost>& weight, const std::vector<Cost>& cost) {
    order.resize(weight.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      auto lhs = static_cast<u128>(weight[static_cast<std::size_t>(a)]) *
                 cost[static_cast<std::size_t>(b)];
      auto rhs = static_cast<u128>(weight[static_cast<std::size_t>(b)]) *
                 cost[static_cast<std::size_t>(a)];
      if (lhs != rhs) return lhs > rhs;
      return a < b;
    });
  }
};

SolveResult branch_and_bound_additive(const Scenario& s, SatisfactionFn fn,
                                      [[maybe_unused]] const SolverCaps& caps) {
  Instance inst(s);
  std::vector<Cost> weight(static_cast<std::size_t>(inst.m));
  for (int i = 0; i < inst.m; ++i) {
    weight[static_cast<std::size_t>(i)] = inst.additive_weight(fn, i);
  }
  DensityOrder density(weight, inst.cost);

  Incumbent best;
  {
    SolveResult seed = solve_greedy(s, fn, GreedyOptions{.positive_gain_only = true});
    // Seed only the (value, cost+1) bound: a real candidate with the seed's
    // value and cost will strictly improve on it, so the canonical
    // first-found rule is preserved.
    best.value = seed.value;
    best.cost = seed.budget.total_cost + 1;
  }
  best.offer(0, 0, {});  // the empty budget is always feasible

  std::vector<int> chosen;
  Cost cur_value = 0;
  Cost cur_cost = 0;

  // Fractional knapsack bound on additional value using items 0..i.
  auto frac_value_bound = [&](int i, Cost residual) -> Cost {
    Cost add = 0;
    Cost rem = residual;
    for (int idx : density.order) {
      if (idx > i) continue;
      auto ii = static_cast<std::size_t>(idx);
      if (weight[ii] == 0) break;
      if (inst.cost[ii] <= rem) {
        add += weight[ii];
        rem -= inst.cost[ii];
      } else {
        add += static_cast<Cost>(static_cast<u128>(weight[ii]) * rem / inst.cost[ii]);
        break;
      }
    }
    return add;
  };

  // Fractional lower bound on the cost of gaining `needed` more value from
  // items 0..i; kInf when unreachable.
  auto frac_cost_bound = [&](int i, Cost needed) -> Cost {
    Cost spent = 0;
    for (int idx : density.order) {
      if (idx > i) continue;
      auto ii = static_cast<std::size_t>(idx);
      if (weight[ii] == 0) break;
      if (weight[ii] < needed) {
        needed -= weight[ii];
        spent += inst.cost[ii];
      } else {
        spent += static_cast<Cost>(static_cast<u128>(inst.cost[ii]) * needed / weight[ii]);
        return spent;
      }
    }
    return kInf;
  };

  auto dfs = [&](auto&& self, int i) -> void {
    if (i < 0) return;
    Cost ub = cur_value + frac_value_bound(i, inst.limit - cur_cost);
    if (ub < best.value) return;
    if (ub == best.value) {
      if (cur_value == ub) return;  // descendants only add cost
      Cost lb = frac_cost_bound(i, best.value - cur_value);
      if (lb == kInf || cur_cost + lb > best.cost) return;
    }
    self(self, i - 1);
    auto ia = static_cast<std::size_t>(i);
    if (weight[ia] > 0 && cur_cost + inst.cost[ia] <= inst.limit) {
      cur_cost += inst.cost[ia];
      cur_value += weight[ia];
      chosen.push_back(i);
      best.offer(cur_value, cur_cost, chosen);
      self(self, i - 1);
      chosen.pop_back();
      cur_value -= weight[ia];
      cur_cost -= inst.cost[ia];
    }
  };
  dfs(dfs, inst.m - 1);
  if (!best.real) throw InternalError("branch and bound ended without a candidate");
  return finish(s, fn, std::move(best.members));
}

SolveResult branch_and_bound_cover(const Scenario& s, [[maybe_unused]] const SolverCaps& caps) {
  Instance inst(s);
  int words = (inst.n + 63) / 64;
  auto mask_of = [&](int item) {
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(words), 0);
    for (int v : inst.approvers[static_cast<std::size_t>(item)]) {
      mask[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
    }
    return mask;
  };
  std::vector<std::vector<std::uint64_t>> item_mask;
  item_mask.reserve(static_cast<std::size_t>(inst.m));
  for (int i = 0; i < inst.m; ++i) item_mask.push_back(mask_of(i));

  // prefix_union[i] = approvers reachable through items 0..i-1.
  std::vector<std::vector<std::uint64_t>> prefix_union(
      static_cast<std::size_t>(inst.m) + 1,
      std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
  for (int i = 0; i < inst.m; ++i) {
    for (int w = 0; w < words; ++w) {
      prefix_union[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(w)] =
          prefix_union[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)] |
          item_mask[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)];
    }
  }
  // Items by ascending cost, for the "how many more items fit" bound.
  std::vector<int> by_cost(static_cast<std::size_t>(inst.m));
  std::iota(by_cost.begin(), by_cost.end(), 0);
  std::sort(by_cost.begin(), by_cost.end(), [&](int a, int b) {
    auto ca = inst.cost[static_cast<std::size_t>(a)];
    auto cb = inst.cost[static_cast<std::size_t>(b)];
    if (ca != cb) return ca < cb;
    return a < b;
  });

  Incumbent best;
  {
    SolveResult seed = solve_greedy(s, SatisfactionFn::CoverIndicator,
                                    GreedyOptions{.positive_gain_only = true});
    best.value = seed.value;
    best.cost = seed.budget.total_cost + 1;
  }
  best.offer(0, 0, {});

  std::vector<std::uint64_t> covered(static_cast<std::size_t>(words), 0);
  std::vector<int> chosen;
  Cost cur_value = 0;
  Cost cur_cost = 0;
  std::vector<Cost> marg_scratch;
  marg_scratch.reserve(static_cast<std::size_t>(inst.m));

  auto marginal = [&](int item) -> Cost {
    Cost c = 0;
    const auto& mk = item_mask[static_cast<std::size_t>(item)];
    for (int w = 0; w < words; ++w) {
      c += static_cast<Cost>(
          std::popcount(mk[static_cast<std::size_t>(w)] & ~covered[static_cast<std::size_t>(w)]));
    }
    return c;
  };

  auto dfs = [&](auto&& self, int i) -> void {
    if (i < 0) return;
    Cost residual = inst.limit - cur_cost;

    // Union bound: voters reachable at all through the undecided prefix.
    Cost reachable = 0;
    for (int w = 0; w < words; ++w) {
      reachable += static_cast<Cost>(
          std::popcount(prefix_union[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(w)] &
                        ~covered[static_cast<std::size_t>(w)]));
    }
    Cost ub = cur_value + reachable;
    if (ub < best.value) return;

    // Count bound: at most k more items fit; their coverage is at most the
    // sum of the k largest marginals.
    marg_scratch.clear();
    Cost max_marg = 0;
    Cost min_pos_cost = kInf;
    for (int idx = 0; idx <= i; ++idx) {
      Cost mg = marginal(idx);
      if (mg > 0) {
        marg_scratch.push_back(mg);
        if (mg > max_marg) max_marg = mg;
        Cost c = inst.cost[static_cast<std::size_t>(idx)];
        if (c < min_pos_cost) min_pos_cost = c;
      }
    }
    int k = 0;
    {
      Cost acc = 0;
      for (int idx : by_cost) {
        if (idx > i) continue;
        Cost c = inst.cost[static_cast<std::size_t>(idx)];
        if (acc + c > residual) break;
        acc += c;
        ++k;
        if (k >= static_cast<int>(marg_scratch.size())) break;
      }
    }
    if (k < static_cast<int>(marg_scratch.size())) {
      std::nth_element(marg_scratch.begin(), marg_scratch.begin() + k, marg_scratch.end(),
                       std::greater<>());
      marg_scratch.resize(static_cast<std::size_t>(k));
    }
    Cost topk = std::accumulate(marg_scratch.begin(), marg_scratch.end(), Cost{0});
    ub = std::min(ub, cur_value + topk);
    if (ub < best.value) return;
    if (ub == best.value) {
      if (cur_value == ub) return;
      Cost needed = best.value - cur_value;
      // At least ceil(needed / max_marg) further items, each costing at
      // least min_pos_cost.
      if (max_marg == 0) return;
      Cost min_items = (needed + max_marg - 1) / max_marg;
      if (min_pos_cost != kInf && cur_cost + min_items * min_pos_cost > best.cost) return;
    }

    self(self, i - 1);
    auto ia = static_cast<std::size_t>(i);
    Cost mg = marginal(i);
    if (mg > 0 && cur_cost + inst.cost[ia] <= inst.limit) {
      std::vector<std::uint64_t> delta(static_cast<std::size_t>(words));
      for (int w = 0; w < words; ++w) {
        auto iw = static_cast<std::size_t>(w);
        delta[iw] = item_mask[ia][iw] & ~covered[iw];
        covered[iw] |= delta[iw];
      }
      cur_cost += inst.cost[ia];
      cur_value += mg;
      chosen.push_back(i);
      best.offer(cur_value, cur_cost, chosen);
      self(self, i - 1);
      chosen.pop_back();
      cur_value -= mg;
      cur_cost -= inst.cost[ia];
      for (int w = 0; w < words; ++w) {
        auto iw = static_cast<std::size_t>(w);
        covered[iw] &= ~delta[iw];
      }
    }
  };
  dfs(dfs, inst.m - 1);
  if (!best.real) throw InternalError("branch and bound ended without a candidate");
  return finish(s, SatisfactionFn::CoverIndicator, std::move(best.members));
}

void check_cells(std::size_t rows, std::size_t cols, const SolverCaps& caps, const char* what) {
  if (cols != 0 && rows > caps.max_table_cells / cols) {
    throw ResourceLimitError(std::string(what) + " table would need " + std::to_string(rows) +
                             "x" + std::to_string(cols) + " cells");
  }
}

}  // namespace

SolveResult solve_greedy(const Scenario& s, SatisfactionFn fn, const GreedyOptions& opts) {
  return run_iterative(s, fn, /*proportional=*/false, opts);
}

SolveResult solve_prop_greedy(const Scenario& s, SatisfactionFn fn, const GreedyOptions& opts) {
  return run_iterative(s, fn, /*proportional=*/true, opts);
}

SolveResult solve_max_count_dp(const Scenario& s, const SolverCaps& caps) {
  Instance inst(s);
  auto m = static_cast<std::size_t>(inst.m);
  auto z_max = static_cast<std::size_t>(inst.m) * static_cast<std::size_t>(inst.n);
  check_cells(m + 1, z_max + 1, caps, "count dp");

  // T[i][z] = cheapest cost of a subset of the first i items whose total
  // satisfaction is exactly z; kInf marks unreachable levels.
  std::vector<std::vector<Cost>> T(m + 1, std::vector<Cost>(z_max + 1, kInf));
  T[0][0] = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    Cost w = inst.approver_count[i - 1];
    Cost c = inst.cost[i - 1];
    for (std::size_t z = 0; z <= z_max; ++z) {
      Cost bestc = T[i - 1][z];
      if (z >= w && T[i - 1][z - w] != kInf) {
        bestc = std::min(bestc, T[i - 1][z - w] + c);
      }
      T[i][z] = bestc;
    }
  }
  std::size_t z_star = 0;
  for (std::size_t z = z_max + 1; z-- > 0;) {
    if (T[m][z] <= inst.limit) {
      z_star = z;
      break;
    }
  }
  Cost c_star = T[m][z_star];

  // Reconstruct the canonical optimum: walk from the largest item down,
  // excluding whenever the same (satisfaction, cost) state stays reachable.
  std::vector<int> members;
  std::size_t z_rem = z_star;
  Cost c_rem = c_star;
  for (std::size_t i = m; i-- > 0;) {
    if (T[i][z_rem] == c_rem) continue;
    Cost w = inst.approver_count[i];
    Cost c = inst.cost[i];
    members.push_back(static_cast<int>(i));
    z_rem -= static_cast<std::size_t>(w);
    c_rem -= c;
  }
  if (z_rem != 0 || c_rem != 0) throw InternalError("count dp reconstruction failed");
  return finish(s, SatisfactionFn::CountApproved, std::move(members));
}

SolveResult solve_max_cost_dp(const Scenario& s, const SolverCaps& caps) {
  Instance inst(s);
  if (inst.limit > caps.cost_dp_limit) {
    throw ResourceLimitError("budget limit " + std::to_string(inst.limit) +
                             " exceeds the pseudopolynomial cap " +
                             std::to_string(caps.cost_dp_limit) +
                             "; consider the FPTAS (--epsilon)");
  }
  auto m = static_cast<std::size_t>(inst.m);
  auto w_max = static_cast<std::size_t>(inst.limit);
  check_cells(m + 1, w_max + 1, caps, "cost dp");

  // G[i][w] = best total satisfaction over subsets of the first i items of
  // total cost exactly w; kInf marks unreachable spend levels.
  std::vector<std::vector<Cost>> G(m + 1, std::vector<Cost>(w_max + 1, kInf));
  G[0][0] = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    Cost c = inst.cost[i - 1];
    Cost val = inst.additive_weight(SatisfactionFn::CostApproved, static_cast<int>(i - 1));
    for (std::size_t w = 0; w <= w_max; ++w) {
      Cost bestv = G[i - 1][w];
      if (static_cast<Cost>(w) >= c && G[i - 1][w - static_cast<std::size_t>(c)] != kInf) {
        Cost cand = G[i - 1][w - static_cast<std::size_t>(c)] + val;
        if (bestv == kInf || cand > bestv) bestv = cand;
      }
      G[i][w] = bestv;
    }
  }
  Cost v_star = 0;
  std::size_t c_star = 0;
  for (std::size_t w = 0; w <= w_max; ++w) {
    if (G[m][w] != kInf && G[m][w] > v_star) {
      v_star = G[m][w];
      c_star = w;
    }
  }
  if (v_star == 0) c_star = 0;  // the empty budget
  else {
    for (std::size_t w = 0; w <= w_max; ++w) {
      if (G[m][w] == v_star) {
        c_star = w;
        break;
      }
    }
  }

  std::vector<int> members;
  std::size_t w_rem = c_star;
  Cost v_rem = v_star;
  for (std::size_t i = m; i-- > 0;) {
    if (G[i][w_rem] != kInf && G[i][w_rem] == v_rem) continue;
    Cost c = inst.cost[i];
    Cost val = inst.additive_weight(SatisfactionFn::CostApproved, static_cast<int>(i));
    members.push_back(static_cast<int>(i));
    w_rem -= static_cast<std::size_t>(c);
    v_rem -= val;
  }
  if (w_rem != 0 || v_rem != 0) throw InternalError("cost dp reconstruction failed");
  return finish(s, SatisfactionFn::CostApproved, std::move(members));
}

SolveResult solve_max_cost_fptas(const Scenario& s, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw Error("epsilon must lie strictly between 0 and 1");
  }
  Instance inst(s);
  // Knapsack elements: weight = cost(a), value = cost(a) * approvers(a).
  std::vector<int> ids;
  for (int i = 0; i < inst.m; ++i) {
    auto ia = static_cast<std::size_t>(i);
    if (inst.cost[ia] <= inst.limit && inst.approver_count[ia] > 0) ids.push_back(i);
  }
  if (ids.empty()) return finish(s, SatisfactionFn::CostApproved, {});

  Cost p_max = 0;
  for (int i : ids) {
    p_max = std::max(p_max, inst.additive_weight(SatisfactionFn::CostApproved, i));
  }
  auto k = ids.size();
  long double K = static_cast<long double>(epsilon) * static_cast<long double>(p_max) /
                  static_cast<long double>(k);
  std::vector<Cost> scaled(k);
  std::size_t q_total = 0;
  for (std::size_t j = 0; j < k; ++j) {
    auto p = static_cast<long double>(inst.additive_weight(SatisfactionFn::CostApproved, ids[j]));
    scaled[j] = static_cast<Cost>(std::floor(p / K));
    q_total += static_cast<std::size_t>(scaled[j]);
  }

  // minw[q] = lightest weight reaching scaled value exactly q.
  std::vector<Cost> minw(q_total + 1, kInf);
  minw[0] = 0;
  std::vector<std::vector<std::uint8_t>> took(k, std::vector<std::uint8_t>(q_total + 1, 0));
  for (std::size_t j = 0; j < k; ++j) {
    Cost c = inst.cost[static_cast<std::size_t>(ids[j])];
    auto q_j = static_cast<std::size_t>(scaled[j]);
    if (q_j == 0) continue;
    for (std::size_t q = q_total; q >= q_j; --q) {
      if (minw[q - q_j] != kInf && minw[q - q_j] + c < minw[q]) {
        minw[q] = minw[q - q_j] + c;
        took[j][q] = 1;
      }
      if (q == q_j) break;
    }
  }
  std::size_t q_best = 0;
  for (std::size_t q = q_total + 1; q-- > 0;) {
    if (minw[q] <= inst.limit) {
      q_best = q;
      break;
    }
  }
  std::vector<int> members;
  std::size_t q = q_best;
  for (std::size_t j = k; j-- > 0;) {
    if (q == 0) break;
    if (took[j][q]) {
      members.push_back(ids[j]);
      q -= static_cast<std::size_t>(scaled[j]);
    }
  }
  return finish(s, SatisfactionFn::CostApproved, std::move(members));
}

SolveResult solve_max_cover_fpt_voters(const Scenario& s, const SolverCaps& caps) {
  Instance inst(s);
  if (inst.n > caps.fpt_max_voters || inst.n > 30) {
    throw ResourceLimitError("voter-subset dp capped at " +
                             std::to_string(std::min(caps.fpt_max_voters, 30)) +
                             " voters (got " + std::to_string(inst.n) + ")");
  }
  auto m = static_cast<std::size_t>(inst.m);
  std::size_t states = std::size_t{1} << inst.n;
  check_cells(m + 1, states, caps, "voter-subset dp");

  std::vector<std::uint64_t> apr(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (int v : inst.approvers[i]) apr[i] |= std::uint64_t{1} << v;
  }

  // R[i][S] = cheapest cost of a subset of the first i items whose approvers
  // cover at least the voter set S (the fixpoint of the relaxation
  // dp[S ∪ approvers(a)] <- dp[S] + cost(a), organized per item prefix so
  // the canonical budget can be reconstructed).
  std::vector<std::vector<Cost>> R(m + 1, std::vector<Cost>(states, kInf));
  R[0][0] = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    Cost c = inst.cost[i - 1];
    std::uint64_t a = apr[i - 1];
    for (std::size_t S = 0; S < states; ++S) {
      Cost bestc = R[i - 1][S];
      std::size_t without = S & ~static_cast<std::size_t>(a);
      if (R[i - 1][without] != kInf) bestc = std::min(bestc, R[i - 1][without] + c);
      R[i][S] = bestc;
    }
  }
  int v_star = 0;
  for (std::size_t S = 0; S < states; ++S) {
    if (R[m][S] <= inst.limit) {
      v_star = std::max(v_star, std::popcount(static_cast<std::uint64_t>(S)));
    }
  }
  Cost c_star = kInf;
  for (std::size_t S = 0; S < states; ++S) {
    if (std::popcount(static_cast<std::uint64_t>(S)) == v_star) {
      c_star = std::min(c_star, R[m][S]);
    }
  }

  // Cheapest completion through the first i items that, joined with the
  // voters D already covered, reaches v_star voters.
  auto completion_cost = [&](std::size_t i, std::uint64_t D) -> Cost {
    Cost bestc = kInf;
    for (std::size_t S = 0; S < states; ++S) {
      if (R[i][S] == kInf) continue;
      std::uint64_t u = S | D;
      if (std::popcount(u) >= v_star) bestc = std::min(bestc, R[i][S]);
    }
    return bestc;
  };

  std::vector<int> members;
  std::uint64_t D = 0;
  Cost c_rem = c_star;
  for (std::size_t i = m; i-- > 0;) {
    if (completion_cost(i, D) == c_rem) continue;
    members.push_back(static_cast<int>(i));
    D |= apr[i];
    c_rem -= inst.cost[i];
  }
  if (c_rem != 0 || std::popcount(static_cast<std::uint64_t>(D)) < v_star) {
    throw InternalError("voter-subset dp reconstruction failed");
  }
  return finish(s, SatisfactionFn::CoverIndicator, std::move(members));
}

SolveResult solve_max_exact(const Scenario& s, SatisfactionFn fn, ExactStrategy strategy,
                            const SolverCaps& caps) {
  switch (strategy) {
    case ExactStrategy::BruteForce:
      return brute_force(s, fn, caps);
    case ExactStrategy::BranchAndBound:
      if (fn == SatisfactionFn::CoverIndicator) return branch_and_bound_cover(s, caps);
      if (fn == SatisfactionFn::CountApproved || fn == SatisfactionFn::CostApproved) {
        return branch_and_bound_additive(s, fn, caps);
      }
      throw UnsupportedPairingError("branch and bound supports count, cover and cost only");
    case ExactStrategy::SpecializedDP:
      if (fn == SatisfactionFn::CountApproved) return solve_max_count_dp(s, caps);
      if (fn == SatisfactionFn::CostApproved) return solve_max_cost_dp(s, caps);
      throw UnsupportedPairingError("specialized dp supports count and cost only");
    case ExactStrategy::FptVoters:
      if (fn == SatisfactionFn::CoverIndicator) return solve_max_cover_fpt_voters(s, caps);
      throw UnsupportedPairingError("the voter-subset dp supports cover only");
  }
  throw InternalError("unknown strategy");
}

SolveResult solve_rule(const Scenario& s, const RuleSpec& rule, const GreedyOptions& opts,
                       const SolverCaps& caps) {
  switch (rule.approach) {
    case Approach::Greedy:
      return solve_greedy(s, rule.satisfaction, opts);
    case Approach::PropGreedy:
      return solve_prop_greedy(s, rule.satisfaction, opts);
    case Approach::Max:
      switch (rule.satisfaction) {
        case SatisfactionFn::CountApproved:
          return solve_max_count_dp(s, caps);
        case SatisfactionFn::CostApproved:
          if (s.limit() <= caps.cost_dp_limit) return solve_max_cost_dp(s, caps);
          return solve_max_exact(s, rule.satisfaction, ExactStrategy::BranchAndBound, caps);
        case SatisfactionFn::CoverIndicator:
          return solve_max_exact(s, rule.satisfaction, ExactStrategy::BranchAndBound, caps);
        case SatisfactionFn::MinApprovedCost:
          return solve_max_exact(s, rule.satisfaction, ExactStrategy::BruteForce, caps);
      }
  }
  throw InternalError("unknown rule");
}

}  // namespace pb
