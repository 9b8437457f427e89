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
// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. Usage: pb_acceptance <path-to-pb-binary>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "pb/axioms.hpp"
#include "pb/core.hpp"
#include "pb/experiments.hpp"
#include "pb/satisfaction.hpp"
#include "pb/solvers.hpp"

#ifdef __unix__
#include <sys/wait.h>
#endif

namespace fs = std::filesystem;
using namespace pb;
using pbtest::make;

namespace {

int g_failures = 0;

void report(bool ok, const std::string& name, const std::string& detail = "") {
  std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.empty() ? "" : ": ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

int run_command(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
#ifdef __unix__
  if (rc != -1 && WIFEXITED(rc)) return WEXITSTATUS(rc);
#endif
  return rc;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

void criterion_oracle_equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  pbtest::RandomScenarioParams params;
  params.max_items = 12;
  params.max_voters = 8;
  params.max_cost = 20;
  params.max_limit = 60;
  std::string detail;
  bool ok = true;
  for (std::uint64_t seed = 0; seed < 500 && ok; ++seed) {
    Scenario s = pbtest::random_scenario(seed, params);
    for (auto fn : {SatisfactionFn::CountApproved, SatisfactionFn::CoverIndicator,
                    SatisfactionFn::CostApproved}) {
      Cost reference = solve_max_exact(s, fn, ExactStrategy::BruteForce).value;
      Cost bnb = solve_max_exact(s, fn, ExactStrategy::BranchAndBound).value;
      Cost specialized = reference;
      if (fn == SatisfactionFn::CountApproved) specialized = solve_max_count_dp(s).value;
      if (fn == SatisfactionFn::CostApproved) specialized = solve_max_cost_dp(s).value;
      if (fn == SatisfactionFn::CoverIndicator) {
        specialized = solve_max_cover_fpt_voters(s).value;
      }
      if (bnb != reference || specialized != reference) {
        ok = false;
        detail = "mismatch at seed " + std::to_string(seed) + " fn " + satisfaction_name(fn);
        break;
      }
    }
  }
  double secs = seconds_since(t0);
  if (ok && secs >= 60.0) {
    ok = false;
    detail = "took " + std::to_string(secs) + "s (budget 60s)";
  }
  report(ok, "oracle equivalence: 500 scenarios, dp/fpt/bnb match brute force exactly", detail);
}

void criterion_paper_fixtures() {
  bool ok = true;
  std::string detail;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  };

  {
    // limit fixture, coverage: at limit 1 the middle item attains the optimal
    // value 2; at limit 2 the unique optimum is the two outer items.
    Scenario s1 = make({1, 1, 1}, {{0}, {0, 1}, {1, 2}, {2}}, 1);
    OptimumSet o1 = enumerate_optima(s1, SatisfactionFn::CoverIndicator);
    expect(o1.value == 2, "cover limit fixture: optimum at limit 1 is 2");
    expect(total_satisfaction(SatisfactionFn::CoverIndicator, s1, Budget::of(s1, {1})) == 2,
           "cover limit fixture: the middle item attains the optimum");
    Scenario s2 = make({1, 1, 1}, {{0}, {0, 1}, {1, 2}, {2}}, 2);
    OptimumSet o2 = enumerate_optima(s2, SatisfactionFn::CoverIndicator);
    expect(o2.value == 4 && o2.budgets.size() == 1 &&
               o2.budgets[0] == Budget::of(s2, {0, 2}),
           "cover limit fixture: unique optimum {0,2} at limit 2");
  }
  {
    // limit fixture, cost satisfaction: unique optima flip between limits
    Scenario s6 = make({2, 3, 3, 5}, {{0, 1, 2, 3}}, 6);
    OptimumSet o6 = enumerate_optima(s6, SatisfactionFn::CostApproved);
    expect(o6.value == 6 && o6.budgets.size() == 1 &&
               o6.budgets[0] == Budget::of(s6, {1, 2}),
           "cost limit fixture: unique optimum {1,2} at limit 6");
    Scenario s7 = make({2, 3, 3, 5}, {{0, 1, 2, 3}}, 7);
    OptimumSet o7 = enumerate_optima(s7, SatisfactionFn::CostApproved);
    expect(o7.value == 7 && o7.budgets.size() == 1 &&
               o7.budgets[0] == Budget::of(s7, {0, 3}),
           "cost limit fixture: unique optimum {0,3} at limit 7");
  }
  {
    // limit fixture, count satisfaction with five voters
    Scenario s6 = make({2, 3, 3, 5}, {{0, 1, 2, 3}, {0, 1, 2, 3}, {1, 2, 3}, {3}, {3}}, 6);
    OptimumSet o6 = enumerate_optima(s6, SatisfactionFn::CountApproved);
    expect(o6.value == 6 && o6.budgets.size() == 1 &&
               o6.budgets[0] == Budget::of(s6, {1, 2}),
           "count limit fixture: unique optimum {1,2} at limit 6");
    Scenario s7 = make({2, 3, 3, 5}, {{0, 1, 2, 3}, {0, 1, 2, 3}, {1, 2, 3}, {3}, {3}}, 7);
    OptimumSet o7 = enumerate_optima(s7, SatisfactionFn::CountApproved);
    expect(o7.value == 7 && o7.budgets.size() == 1 &&
               o7.budgets[0] == Budget::of(s7, {0, 3}),
           "count limit fixture: unique optimum {0,3} at limit 7");
  }
  {
    // discount fixture: dropping one unit off a budgeted cost-2 item flips
    // the winner to the other item
    Scenario s = make({2, 2}, {{0, 1}}, 2);
    OptimumSet before = enumerate_optima(s, SatisfactionFn::CostApproved);
    expect(before.value == 2 && before.item_in_any(0) && before.item_in_any(1),
           "discount fixture: both items tie before the discount");
    AxiomVerdict v = check_discount_mono(RuleSpec{Approach::Max, SatisfactionFn::CostApproved},
                                         s, 0);
    expect(v.violated, "discount fixture: max-cost drops the discounted item");
    expect(v.witness && v.witness->winner_after == Budget::of(s, {1}),
           "discount fixture: the remaining winner is the undiscounted item");
  }
  {
    // splitting fixture: greedy-cost funds the intact item over the parts
    Scenario s = make({3, 3}, {{0, 1}}, 3);
    auto runs = iterative_outcomes(s, SatisfactionFn::CostApproved, false);
    bool item1_possible = false;
    for (const Budget& b : runs) item1_possible = item1_possible || b.contains(1);
    expect(item1_possible, "splitting fixture: the split item can win beforehand");
    SplitResult sr = apply_split(s, 1, {1, 1, 1});
    SolveResult after = solve_greedy(sr.scenario, SatisfactionFn::CostApproved);
    expect(after.budget == Budget::of(sr.scenario, {0}),
           "splitting fixture: greedy-cost picks the intact item");
    AxiomVerdict v =
        check_splitting_mono(RuleSpec{Approach::Greedy, SatisfactionFn::CostApproved}, s, 0,
                             {1, 1, 1});
    expect(v.violated, "splitting fixture: greedy-cost violates splitting monotonicity");
  }
  {
    // merging fixture: the three unit items win alone but lose merged
    Scenario s = make({1, 1, 1, 2, 2}, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2}}, 4);
    OptimumSet before = enumerate_optima(s, SatisfactionFn::CountApproved);
    expect(before.value == 9 && before.budgets.size() == 1 &&
               before.budgets[0] == Budget::of(s, {0, 1, 2}),
           "merging fixture: unique optimum {0,1,2} of value 9");
    MergeResult mr = apply_merge(s, {0, 1, 2});
    OptimumSet after = enumerate_optima(mr.scenario, SatisfactionFn::CountApproved);
    expect(after.budgets.size() == 1 &&
               after.budgets[0] == Budget::of(mr.scenario, {1, 2}),
           "merging fixture: the merged scenario funds the two cost-2 items");
    expect(check_merging_mono(RuleSpec{Approach::Max, SatisfactionFn::CountApproved}, s,
                              {0, 1, 2})
               .violated,
           "merging fixture: max-count violates merging monotonicity");
  }
  report(ok, "paper fixtures: limit triple, discount, splitting, merging reproduce exactly",
         detail);
}

void criterion_audit_via_cli(const std::string& pb, const fs::path& tmp) {
  auto t0 = std::chrono::steady_clock::now();
  fs::path out = tmp / "audit";
  int rc = run_command(pb + " axioms --trials 200 --seed 1 --out " + out.string() + " > " +
                       (tmp / "audit_stdout.txt").string() + " 2>&1");
  double secs = seconds_since(t0);
  bool ok = rc == 0;
  std::string detail;
  if (!ok) detail = "exit code " + std::to_string(rc);
  if (ok && secs >= 300.0) {
    ok = false;
    detail = "took " + std::to_string(secs) + "s (budget 300s)";
  }
  report(ok, "reference-matrix audit: axioms --trials 200 --seed 1 exits 0", detail);
}

void criterion_fptas() {
  pbtest::RandomScenarioParams params;
  params.max_items = 12;
  params.max_voters = 8;
  params.max_cost = 20;
  params.max_limit = 60;
  bool ok = true;
  std::string detail;
  for (std::uint64_t seed = 1000; seed < 1100 && ok; ++seed) {
    Scenario s = pbtest::random_scenario(seed, params);
    Cost opt = solve_max_cost_dp(s).value;
    Cost v1 = solve_max_cost_fptas(s, 0.1).value;
    Cost v3 = solve_max_cost_fptas(s, 0.3).value;
    if (v1 * 10 < opt * 9 || v3 * 10 < opt * 7) {
      ok = false;
      detail = "guarantee missed at seed " + std::to_string(seed);
    }
  }
  report(ok, "fptas guarantee: value >= (1-eps) * dp optimum for eps in {0.1, 0.3}", detail);
}

void criterion_greedy_cover_bound() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t seed = 2000; seed < 2200 && ok; ++seed) {
    Rng rng(seed);
    int m = static_cast<int>(2 + rng.next_below(11));  // up to 12 unit-cost items
    int n = static_cast<int>(1 + rng.next_below(8));
    std::vector<Cost> costs(static_cast<std::size_t>(m), 1);
    std::vector<std::vector<int>> approvals(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < m; ++i) {
        if (rng.next_double() < 0.4) approvals[static_cast<std::size_t>(v)].push_back(i);
      }
    }
    Cost k = 1 + rng.next_below(static_cast<std::uint64_t>(m));
    Scenario s(std::move(costs), std::move(approvals), k);
    Cost opt = solve_max_exact(s, SatisfactionFn::CoverIndicator,
                               ExactStrategy::BruteForce).value;
    Cost greedy = solve_greedy(s, SatisfactionFn::CoverIndicator).value;
    if (static_cast<double>(greedy) + 1e-9 <
        (1.0 - 1.0 / 2.718281828459045) * static_cast<double>(opt)) {
      ok = false;
      detail = "bound missed at seed " + std::to_string(seed);
    }
  }
  report(ok, "greedy coverage bound: greedy >= (1 - 1/e) * optimum on unit costs", detail);
}

struct ExpShares {
  double expensive_share = 0;  // expensive funds / total funds
};

ExpShares shares_for(const std::vector<RuleRunStats>& stats, std::size_t idx) {
  const auto& st = stats[idx];
  ExpShares sh;
  if (st.total_funds > 0) {
    sh.expensive_share =
        static_cast<double>(st.group_funds[1]) / static_cast<double>(st.total_funds);
  }
  return sh;
}

void criterion_experiment_one() {
  const std::vector<RuleSpec> max_rules = {
      {Approach::Max, SatisfactionFn::CountApproved},
      {Approach::Max, SatisfactionFn::CoverIndicator},
      {Approach::Max, SatisfactionFn::CostApproved},
  };
  auto run_at = [&](Cost x) {
    ExperimentRun run;
    run.config = exp1_config(x);
    run.rules = max_rules;
    run.repetitions = 20;
    run.seed = 1;
    run.threads = 4;
    return run_experiment(run);
  };
  auto at10 = run_at(10);
  auto at30 = run_at(30);
  auto at90 = run_at(90);
  auto at190 = run_at(190);

  double count30 = shares_for(at30, 0).expensive_share;
  double cover90 = shares_for(at90, 1).expensive_share;
  double cover190 = shares_for(at190, 1).expensive_share;
  double cost190 = shares_for(at190, 2).expensive_share;

  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "count@30=%.3f cover@90=%.3f cover@190=%.3f cost@190=%.3f; max-count expensive "
                "funds per x: 10->%llu 30->%llu 90->%llu 190->%llu",
                count30, cover90, cover190, cost190,
                static_cast<unsigned long long>(at10[0].group_funds[1]),
                static_cast<unsigned long long>(at30[0].group_funds[1]),
                static_cast<unsigned long long>(at90[0].group_funds[1]),
                static_cast<unsigned long long>(at190[0].group_funds[1]));
  bool ok = count30 < 0.05 && cover90 >= 0.05 && cover190 < 0.05 && cost190 >= 0.20;
  report(ok,
         "experiment one trends (heuristic 5%/20% cutoffs): max-count sheds expensive items "
         "at x=30, max-cover by x=190, max-cost keeps them",
         buf);
}

void criterion_experiment_two() {
  const std::vector<RuleSpec> rules = {
      {Approach::Max, SatisfactionFn::CountApproved},
      {Approach::Max, SatisfactionFn::CostApproved},
  };
  auto run_at = [&](int x) {
    ExperimentRun run;
    run.config = exp2_config(x);
    run.rules = rules;
    run.repetitions = 20;
    run.seed = 1;
    run.threads = 4;
    return run_experiment(run);
  };
  auto at10 = run_at(10);
  auto at50 = run_at(50);
  auto at70 = run_at(70);

  double cost10 = shares_for(at10, 1).expensive_share;
  double count50 = shares_for(at50, 0).expensive_share;
  double count70 = shares_for(at70, 0).expensive_share;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "cost@10=%.3f count@50=%.3f count@70=%.3f", cost10, count50,
                count70);
  bool ok = cost10 > 0.90 && count70 > 0.90 && count50 < 0.50;
  report(ok,
         "experiment two trends (heuristic 90%/50% cutoffs): max-cost flips to expensive at "
         "x=10, max-count at x=70 but not at x=50",
         buf);
}

void criterion_experiment_three() {
  const std::vector<RuleSpec> rules = {
      {Approach::Max, SatisfactionFn::CostApproved},
      {Approach::Max, SatisfactionFn::CountApproved},
      {Approach::Max, SatisfactionFn::CoverIndicator},
  };
  bool ok = true;
  std::string detail;
  for (double p : {0.5, 0.75, 1.0}) {
    ExperimentRun run;
    run.config = exp3_config(p, 20);
    run.rules = rules;
    run.repetitions = 20;
    run.seed = 1;
    run.threads = 4;
    auto stats = run_experiment(run);
    double local_cost = static_cast<double>(stats[0].group_funds[1]);
    double local_count = static_cast<double>(stats[1].group_funds[1]);
    double local_cover = static_cast<double>(stats[2].group_funds[1]);
    if (!(local_cost <= local_count && local_count <= local_cover)) {
      ok = false;
      char buf[160];
      std::snprintf(buf, sizeof(buf), "p=%.2f cost=%.1f count=%.1f cover=%.1f", p, local_cost,
                    local_count, local_cover);
      detail = buf;
      break;
    }
  }
  report(ok,
         "experiment three ordering at limit 20: local funds cost <= count <= cover for "
         "p >= 0.5",
         detail);
}

bool dirs_have_equal_outputs(const fs::path& a, const fs::path& b, std::string* detail) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a)) {
    auto ext = entry.path().extension();
    if (ext == ".pgm" || ext == ".csv") files.push_back(entry.path().filename());
  }
  if (files.empty()) {
    *detail = "no outputs in " + a.string();
    return false;
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    if (!fs::exists(b / f)) {
      *detail = "missing " + (b / f).string();
      return false;
    }
    if (slurp(a / f) != slurp(b / f)) {
      *detail = "differs: " + f.string();
      return false;
    }
  }
  return true;
}

void criterion_cli_determinism(const std::string& pb, const fs::path& tmp) {
  bool ok = true;
  std::string detail;
  struct Case {
    std::string name;
    std::string args;
  };
  const std::vector<Case> cases = {
      {"exp1", "experiment one --seed 7 --reps 3 --x 30"},
      {"exp3", "experiment three --seed 7 --reps 3 --p 0.5 --limit 20"},
  };
  for (const auto& c : cases) {
    fs::path d1 = tmp / (c.name + "_t1");
    fs::path d4 = tmp / (c.name + "_t4");
    std::string log = (tmp / (c.name + "_log.txt")).string();
    int rc1 = run_command(pb + " " + c.args + " --threads 1 --out " + d1.string() + " >> " +
                          log + " 2>&1");
    int rc4 = run_command(pb + " " + c.args + " --threads 4 --out " + d4.string() + " >> " +
                          log + " 2>&1");
    if (rc1 != 0 || rc4 != 0) {
      ok = false;
      detail = c.name + " exit codes " + std::to_string(rc1) + "/" + std::to_string(rc4);
      break;
    }
    if (!dirs_have_equal_outputs(d1, d4, &detail)) {
      ok = false;
      detail = c.name + " " + detail;
      break;
    }
  }
  report(ok, "cli determinism: --threads 1 and 4 give byte-identical pgm/csv outputs", detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: pb_acceptance <path-to-pb-binary>\n");
    return 2;
  }
  std::string pb = argv[1];
  fs::path tmp = fs::temp_directory_path() / "pb_acceptance";
  fs::remove_all(tmp);
  fs::create_directories(tmp);

  criterion_oracle_equivalence();
  criterion_paper_fixtures();
  criterion_audit_via_cli(pb, tmp);
  criterion_fptas();
  criterion_greedy_cover_bound();
  criterion_experiment_one();
  criterion_experiment_two();
  criterion_experiment_three();
  criterion_cli_determinism(pb, tmp);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
