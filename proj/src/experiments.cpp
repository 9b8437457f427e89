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

#include "pb/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace pb {

namespace {

constexpr double kPi = 3.14159265358979323846;

double dist2(Point a, Point b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

Point sample_disc(Rng& rng, Point center, double radius) {
  for (;;) {
    double x = center.x - radius + 2 * radius * rng.next_double();
    double y = center.y - radius + 2 * radius * rng.next_double();
    double dx = x - center.x;
    double dy = y - center.y;
    if (dx * dx + dy * dy <= radius * radius) return Point{x, y};
  }
}

Point sample_region(Rng& rng, const Region& region) {
  if (region.kind == Region::Kind::Disc) {
    return sample_disc(rng, region.center, region.radius);
  }
  double x = rng.next_double();
  double y = rng.next_double();
  return Point{x, y};
}

GeneratedScenario build_scenario(const PointConfig& config, Rng& rng) {
  GeneratedScenario out;
  out.voter_positions.reserve(static_cast<std::size_t>(config.voter_count));
  for (int v = 0; v < config.voter_count; ++v) {
    out.voter_positions.push_back(sample_region(rng, config.voter_region));
  }
  std::vector<Cost> costs;
  for (const ItemGroup& g : config.item_groups) {
    for (int i = 0; i < g.count; ++i) {
      out.item_positions.push_back(sample_region(rng, g.region));
      out.item_group.push_back(static_cast<int>(&g - config.item_groups.data()));
      costs.push_back(g.cost);
    }
  }
  int m = static_cast<int>(costs.size());
  int n = config.voter_count;
  std::vector<std::vector<int>> approvals(static_cast<std::size_t>(n));

  switch (config.approval.kind) {
    case ApprovalModel::Kind::ClosestK: {
      int k = std::min(config.approval.k, m);
      std::vector<int> order(static_cast<std::size_t>(m));
      for (int v = 0; v < n; ++v) {
        std::iota(order.begin(), order.end(), 0);
        Point pv = out.voter_positions[static_cast<std::size_t>(v)];
        std::sort(order.begin(), order.end(), [&](int a, int b) {
          double da = dist2(pv, out.item_positions[static_cast<std::size_t>(a)]);
          double db = dist2(pv, out.item_positions[static_cast<std::size_t>(b)]);
          if (da != db) return da < db;
          return a < b;  // distance ties break by lower item id
        });
        approvals[static_cast<std::size_t>(v)].assign(order.begin(), order.begin() + k);
      }
      break;
    }
    case ApprovalModel::Kind::ItemClosestVoters: {
      std::vector<int> order(static_cast<std::size_t>(n));
      for (int i = 0; i < m; ++i) {
        int g = out.item_group[static_cast<std::size_t>(i)];
        int k = std::min(config.approval.per_group_k[static_cast<std::size_t>(g)], n);
        if (k <= 0) continue;
        std::iota(order.begin(), order.end(), 0);
        Point pi = out.item_positions[static_cast<std::size_t>(i)];
        std::sort(order.begin(), order.end(), [&](int a, int b) {
          double da = dist2(pi, out.voter_positions[static_cast<std::size_t>(a)]);
          double db = dist2(pi, out.voter_positions[static_cast<std::size_t>(b)]);
          if (da != db) return da < db;
          return a < b;  // distance ties break by lower voter id
        });
        for (int j = 0; j < k; ++j) {
          approvals[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])].push_back(i);
        }
      }
      break;
    }
    case ApprovalModel::Kind::GlobalLocal: {
      double r2 = config.approval.local_radius * config.approval.local_radius;
      for (int v = 0; v < n; ++v) {
        Point pv = out.voter_positions[static_cast<std::size_t>(v)];
        for (int i = 0; i < m; ++i) {
          if (out.item_group[static_cast<std::size_t>(i)] == 0) {
            if (rng.next_double() < config.approval.p) {
              approvals[static_cast<std::size_t>(v)].push_back(i);
            }
          } else {
            if (dist2(pv, out.item_positions[static_cast<std::size_t>(i)]) <= r2) {
              approvals[static_cast<std::size_t>(v)].push_back(i);
            }
          }
        }
      }
      break;
    }
  }
  out.scenario = Scenario(std::move(costs), std::move(approvals), config.limit);
  return out;
}

PointConfig exp1_config(Cost expensive_cost) {
  PointConfig c;
  c.voter_count = 50;
  c.voter_region = Region::disc({0.5, 0.5}, 0.3);
  c.item_groups = {
      ItemGroup{50, Region::disc({0.3, 0.5}, 0.2), 10},
      ItemGroup{50, Region::disc({0.7, 0.5}, 0.2), expensive_cost},
  };
  c.limit = 1000;
  c.approval.kind = ApprovalModel::Kind::ClosestK;
  c.approval.k = 10;
  return c;
}

PointConfig exp2_config(int expensive_reach) {
  PointConfig c;
  c.voter_count = 100;
  c.voter_region = Region::disc({0.5, 0.5}, 0.3);
  c.item_groups = {
      ItemGroup{50, Region::disc({0.3, 0.5}, 0.2), 10},
      ItemGroup{50, Region::disc({0.7, 0.5}, 0.2), 100},
  };
  c.limit = 200;
  c.approval.kind = ApprovalModel::Kind::ItemClosestVoters;
  c.approval.per_group_k = {5, expensive_reach};
  return c;
}

PointConfig exp3_config(double p, Cost limit) {
  PointConfig c;
  c.voter_count = 20;
  c.voter_region = Region::unit_square();
  c.item_groups = {
      ItemGroup{5, Region::unit_square(), 5},   // global items
      ItemGroup{30, Region::unit_square(), 5},  // local items
  };
  c.limit = limit;
  c.approval.kind = ApprovalModel::Kind::GlobalLocal;
  c.approval.p = p;
  c.approval.local_radius = 0.2;
  return c;
}

GeneratedScenario build_scenario_exp1(Rng& rng, Cost expensive_cost) {
  return build_scenario(exp1_config(expensive_cost), rng);
}

GeneratedScenario build_scenario_exp2(Rng& rng, int expensive_reach) {
  return build_scenario(exp2_config(expensive_reach), rng);
}

GeneratedScenario build_scenario_exp3(Rng& rng, double p, Cost limit) {
  return build_scenario(exp3_config(p, limit), rng);
}

void accumulate_histogram(Histogram& h, const Scenario& s, const Budget& winner,
                          const std::vector<Point>& item_positions) {
  for (int id : winner.members) {
    Point p = item_positions[static_cast<std::size_t>(id)];
    int bx = std::clamp(static_cast<int>(std::floor(p.x * Histogram::kBins)), 0,
                        Histogram::kBins - 1);
    int by = std::clamp(static_cast<int>(std::floor(p.y * Histogram::kBins)), 0,
                        Histogram::kBins - 1);
    h.at(bx, by) += s.cost(id);
  }
  h.total_funds += winner.total_cost;
}

std::uint8_t histogram_pixel(std::uint64_t bin_funds, std::uint64_t total_funds) {
  if (total_funds == 0) return 0;
  double x = static_cast<double>(bin_funds);
  double y = static_cast<double>(total_funds);
  double brightness = std::atan(x / (0.0005 * y)) / (kPi / 2);
  return static_cast<std::uint8_t>(std::floor(255.0 * brightness + 0.5));
}

std::array<std::uint8_t, static_cast<std::size_t>(Histogram::kBins) * Histogram::kBins>
render_histogram(const Histogram& h) {
  std::array<std::uint8_t, static_cast<std::size_t>(Histogram::kBins) * Histogram::kBins> px{};
  for (int row = 0; row < Histogram::kBins; ++row) {
    int by = Histogram::kBins - 1 - row;  // top row first
    for (int bx = 0; bx < Histogram::kBins; ++bx) {
      px[static_cast<std::size_t>(row) * Histogram::kBins + static_cast<std::size_t>(bx)] =
          histogram_pixel(h.at(bx, by), h.total_funds);
    }
  }
  return px;
}

std::string histogram_to_pgm(const Histogram& h) {
  auto px = render_histogram(h);
  std::string out = "P2\n50 50\n255\n";
  for (int row = 0; row < Histogram::kBins; ++row) {
    for (int bx = 0; bx < Histogram::kBins; ++bx) {
      if (bx > 0) out += ' ';
      out += std::to_string(
          px[static_cast<std::size_t>(row) * Histogram::kBins + static_cast<std::size_t>(bx)]);
    }
    out += '\n';
  }
  return out;
}

namespace {

struct RepOutcome {
  GeneratedScenario gen;
  std::vector<Budget> budgets;  // one per rule
};

RepOutcome solve_repetition(const ExperimentRun& run, int rep) {
  Rng rng(derive_seed(run.seed, static_cast<std::uint64_t>(rep)));
  RepOutcome out;
  out.gen = build_scenario(run.config, rng);
  GreedyOptions opts;
  opts.positive_gain_only = true;
  out.budgets.reserve(run.rules.size());
  for (const RuleSpec& rule : run.rules) {
    out.budgets.push_back(solve_rule(out.gen.scenario, rule, opts).budget);
  }
  return out;
}

}  // namespace

std::vector<RuleRunStats> run_experiment(const ExperimentRun& run) {
  int reps = run.repetitions;
  std::vector<RepOutcome> outcomes(static_cast<std::size_t>(reps));
  int threads = std::max(1, run.threads);

  if (threads == 1) {
    for (int r = 0; r < reps; ++r) {
      try {
        outcomes[static_cast<std::size_t>(r)] = solve_repetition(run, r);
      } catch (const Error& e) {
        throw ResourceLimitError("repetition " + std::to_string(r) + ": " + e.what());
      }
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::string> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (;;) {
          int r = next.fetch_add(1);
          if (r >= reps) return;
          try {
            outcomes[static_cast<std::size_t>(r)] = solve_repetition(run, r);
          } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(t)] =
                "repetition " + std::to_string(r) + ": " + e.what();
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors) {
      if (!err.empty()) throw ResourceLimitError(err);
    }
  }

  std::size_t groups = run.config.item_groups.size();
  std::vector<RuleRunStats> stats(run.rules.size());
  for (std::size_t ri = 0; ri < run.rules.size(); ++ri) {
    stats[ri].rule = run.rules[ri];
    stats[ri].group_funds.assign(groups, 0);
    stats[ri].group_funds_by_rep.assign(static_cast<std::size_t>(reps) * groups, 0);
  }
  // Merge in repetition order: histogram accumulation is an order-independent
  // sum of integers, so this matches any parallel schedule.
  for (int r = 0; r < reps; ++r) {
    const RepOutcome& out = outcomes[static_cast<std::size_t>(r)];
    for (std::size_t ri = 0; ri < run.rules.size(); ++ri) {
      const Budget& b = out.budgets[ri];
      accumulate_histogram(stats[ri].hist, out.gen.scenario, b, out.gen.item_positions);
      stats[ri].total_funds += b.total_cost;
      for (int id : b.members) {
        auto g = static_cast<std::size_t>(out.gen.item_group[static_cast<std::size_t>(id)]);
        Cost c = out.gen.scenario.cost(id);
        stats[ri].group_funds[g] += c;
        stats[ri].group_funds_by_rep[static_cast<std::size_t>(r) * groups + g] += c;
      }
    }
  }
  return stats;
}

}  // namespace pb
