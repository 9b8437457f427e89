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
// Seeded 2-D Euclidean scenario generators, the three built-in experiments,
// and the 50x50 funds histogram with arctan brightness normalization.
// Everything here is deterministic for a fixed seed; repetitions use
// derived seeds so results do not depend on the thread count.

#ifndef PB_EXPERIMENTS_HPP
#define PB_EXPERIMENTS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pb/core.hpp"
#include "pb/rng.hpp"
#include "pb/solvers.hpp"

namespace pb {

struct Point {
  double x = 0;
  double y = 0;
};

struct Region {
  enum class Kind { Disc, UnitSquare };
  Kind kind = Kind::UnitSquare;
  Point center{};
  double radius = 0;

  static Region disc(Point center, double radius) {
    return Region{Kind::Disc, center, radius};
  }
  static Region unit_square() { return Region{}; }
};

// Uniform point on a disc via rejection sampling from the bounding square
// (the fixed sampling scheme; the number of draws consumed depends only on
// the rng stream). The disc must lie inside the unit square.
Point sample_disc(Rng& rng, Point center, double radius);
Point sample_region(Rng& rng, const Region& region);

struct ItemGroup {
  int count = 0;
  Region region;
  Cost cost = 1;
};

// How approval sets are derived from the sampled positions.
struct ApprovalModel {
  enum class Kind {
    ClosestK,           // each voter approves her k nearest items
    ItemClosestVoters,  // each item adds itself to its k(group) nearest voters
    GlobalLocal,        // group 0 approved with probability p, group 1 within a radius
  };
  Kind kind = Kind::ClosestK;
  int k = 0;                      // ClosestK
  std::vector<int> per_group_k;   // ItemClosestVoters
  double p = 0;                   // GlobalLocal
  double local_radius = 0;        // GlobalLocal
};

struct PointConfig {
  int voter_count = 0;
  Region voter_region;
  std::vector<ItemGroup> item_groups;
  Cost limit = 0;
  ApprovalModel approval;
};

struct GeneratedScenario {
  Scenario scenario;
  std::vector<Point> voter_positions;
  std::vector<Point> item_positions;
  std::vector<int> item_group;  // group index per item
};

// Draw order: voter positions, then item positions group by group, then any
// approval randomness (voter-major, item-minor).
GeneratedScenario build_scenario(const PointConfig& config, Rng& rng);

// The built-in experiment settings.
PointConfig exp1_config(Cost expensive_cost);
PointConfig exp2_config(int expensive_reach);
PointConfig exp3_config(double p, Cost limit);

GeneratedScenario build_scenario_exp1(Rng& rng, Cost expensive_cost);
GeneratedScenario build_scenario_exp2(Rng& rng, int expensive_reach);
GeneratedScenario build_scenario_exp3(Rng& rng, double p, Cost limit);

struct Histogram {
  static constexpr int kBins = 50;
  std::array<std::uint64_t, static_cast<std::size_t>(kBins) * kBins> bins{};
  std::uint64_t total_funds = 0;

  std::uint64_t& at(int bx, int by) {
    return bins[static_cast<std::size_t>(by) * kBins + static_cast<std::size_t>(bx)];
  }
  std::uint64_t at(int bx, int by) const {
    return bins[static_cast<std::size_t>(by) * kBins + static_cast<std::size_t>(bx)];
  }
};

// Adds each budgeted item's cost to the bin holding its point
// (bin = floor(50 * coordinate), clamped to [0, 49]).
void accumulate_histogram(Histogram& h, const Scenario& s, const Budget& winner,
                          const std::vector<Point>& item_positions);

// Brightness of a bin holding funds x out of total funds y:
//   round(255 * arctan(x / (0.0005 * y)) / (pi/2)),
// rounded half up; an empty histogram renders all black.
std::uint8_t histogram_pixel(std::uint64_t bin_funds, std::uint64_t total_funds);

// Row-major pixels, row 0 at the top (bin y = 49), x left to right.
std::array<std::uint8_t, static_cast<std::size_t>(Histogram::kBins) * Histogram::kBins>
render_histogram(const Histogram& h);

// ASCII PGM (P2, maxval 255) of render_histogram.
std::string histogram_to_pgm(const Histogram& h);

struct RuleRunStats {
  RuleSpec rule;
  Histogram hist;
  std::vector<Cost> group_funds;        // per item group, summed over repetitions
  std::vector<Cost> group_funds_by_rep; // flattened [rep * groups + g]
  Cost total_funds = 0;
};

struct ExperimentRun {
  PointConfig config;
  std::vector<RuleSpec> rules;
  int repetitions = 1;
  std::uint64_t seed = 1;
  int threads = 1;
};

// Runs `repetitions` seeded scenarios, solves every rule on each (iterative
// rules run with positive-gain-only selection so unapproved items are never
// funded), and accumulates histograms and per-group funds. The result is
// independent of the thread count. Solver errors are rethrown with the
// repetition index attached.
std::vector<RuleRunStats> run_experiment(const ExperimentRun& run);

}  // namespace pb

#endif  // PB_EXPERIMENTS_HPP
