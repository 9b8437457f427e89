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
// pb: solve budgeting scenarios, audit the rule/axiom matrix, and run the
// built-in Euclidean experiments.
//
// Exit codes: 0 success, 1 usage error, 2 parse/validation error,
// 3 resource-cap error, 4 audit mismatch against the reference matrix.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pb/axioms.hpp"
#include "pb/core.hpp"
#include "pb/experiments.hpp"
#include "pb/satisfaction.hpp"
#include "pb/solvers.hpp"

namespace fs = std::filesystem;
using namespace pb;

namespace {

constexpr const char* kVersion = "pb 1.0.0";

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Timestamps are confined to the log file so stdout and all data outputs
// stay byte-identical across runs.
void write_run_log(const fs::path& dir, const std::string& description) {
  auto now = std::chrono::system_clock::now();
  auto t = std::chrono::system_clock::to_time_t(now);
  char stamp[64];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  std::ofstream log(dir / "run.log", std::ios::app);
  log << stamp << ' ' << description << '\n';
}

std::optional<Approach> approach_from_name(const std::string& name) {
  if (name == "max") return Approach::Max;
  if (name == "greedy") return Approach::Greedy;
  if (name == "propgreedy") return Approach::PropGreedy;
  return std::nullopt;
}

RuleSpec rule_from_name(const std::string& name) {
  auto dash = name.find('-');
  if (dash != std::string::npos) {
    auto ap = approach_from_name(name.substr(0, dash));
    auto fn = satisfaction_from_name(name.substr(dash + 1));
    if (ap && fn) return RuleSpec{*ap, *fn};
  }
  throw Error("unknown rule '" + name + "' (expected e.g. max-count, propgreedy-cost)");
}

std::string ids_to_string(const std::vector<int>& ids, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string scenario_path;
  std::string approach;
  std::string satisfaction;
  std::string strategy;
  double epsilon = -1;
  bool positive_gain_only = false;
  bool kv = false;
  SolverCaps caps;
};

int run_solve(const SolveArgs& args) {
  Scenario s = parse_scenario(read_file(args.scenario_path));
  auto ap = approach_from_name(args.approach);
  auto fn = satisfaction_from_name(args.satisfaction);
  if (!ap) throw Error("unknown approach '" + args.approach + "'");
  if (!fn) throw Error("unknown satisfaction function '" + args.satisfaction + "'");

  GreedyOptions opts;
  opts.positive_gain_only = args.positive_gain_only;

  SolveResult result;
  if (*ap != Approach::Max) {
    if (!args.strategy.empty()) throw Error("--strategy applies to the max approach only");
    if (args.epsilon >= 0) throw Error("--epsilon applies to the max approach only");
    result = *ap == Approach::Greedy ? solve_greedy(s, *fn, opts)
                                     : solve_prop_greedy(s, *fn, opts);
  } else if (args.epsilon >= 0) {
    if (*fn != SatisfactionFn::CostApproved) {
      throw Error("the FPTAS (--epsilon) applies to the cost satisfaction function only");
    }
    if (!args.strategy.empty()) throw Error("--epsilon and --strategy are mutually exclusive");
    result = solve_max_cost_fptas(s, args.epsilon);
  } else if (args.strategy.empty()) {
    result = solve_rule(s, RuleSpec{*ap, *fn}, opts, args.caps);
  } else if (args.strategy == "brute") {
    result = solve_max_exact(s, *fn, ExactStrategy::BruteForce, args.caps);
  } else if (args.strategy == "bnb") {
    result = solve_max_exact(s, *fn, ExactStrategy::BranchAndBound, args.caps);
  } else if (args.strategy == "dp") {
    result = solve_max_exact(s, *fn, ExactStrategy::SpecializedDP, args.caps);
  } else if (args.strategy == "fpt") {
    result = solve_max_exact(s, *fn, ExactStrategy::FptVoters, args.caps);
  } else {
    throw Error("unknown strategy '" + args.strategy + "'");
  }

  std::string trace;
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    if (i > 0) trace += args.kv ? "," : " ";
    trace += std::to_string(result.trace[i].item) + ":" + std::to_string(result.trace[i].gain);
  }
  if (args.kv) {
    std::cout << "items=" << ids_to_string(result.budget.members, ',') << '\n'
              << "cost=" << result.budget.total_cost << '\n'
              << "value=" << result.value << '\n';
    if (!result.trace.empty()) std::cout << "trace=" << trace << '\n';
  } else {
    std::cout << "items " << ids_to_string(result.budget.members) << '\n'
              << "cost " << result.budget.total_cost << '\n'
              << "value " << result.value << '\n';
    if (!result.trace.empty()) std::cout << "trace " << trace << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// axioms

struct AxiomArgs {
  long trials = 200;
  std::uint64_t seed = 1;
  std::string rule;
  std::string axiom;
  std::string out_dir = "axioms-out";
};

std::string witness_text(const Witness& w) {
  std::string out = serialize_scenario(w.before);
  out += "perturbation: " + w.perturbation + " [semantics: " + w.semantics + "]\n";
  out += serialize_scenario(w.after);
  out += "winner-before: " + ids_to_string(w.winner_before.members) + "\n";
  out += "winner-after: " + ids_to_string(w.winner_after.members) + "\n";
  return out;
}

int run_axioms(const AxiomArgs& args) {
  std::optional<RuleSpec> only_rule;
  std::optional<Axiom> only_axiom;
  if (!args.rule.empty()) only_rule = rule_from_name(args.rule);
  if (!args.axiom.empty()) {
    only_axiom = axiom_from_name(args.axiom);
    if (!only_axiom) throw Error("unknown axiom '" + args.axiom + "'");
  }
  fs::create_directories(args.out_dir);
  write_run_log(args.out_dir, "axioms trials=" + std::to_string(args.trials) +
                                  " seed=" + std::to_string(args.seed));

  AuditReport report = audit_matrix(args.trials, args.seed, only_rule, only_axiom);

  const auto& rules = builtin_rules();
  const auto& axioms = audit_axioms();

  // Aligned matrix, rules as columns.
  std::size_t width = 10;
  for (const auto& r : rules) width = std::max(width, rule_name(r).size() + 2);
  std::cout << "axiom            ";
  for (const auto& r : rules) {
    std::string name = rule_name(r);
    std::cout << name << std::string(width - name.size(), ' ');
  }
  std::cout << '\n';
  std::string csv = "rule,axiom,outcome,witness-file\n";
  bool all_match = true;
  for (std::size_t a = 0; a < axioms.size(); ++a) {
    std::string aname = axiom_name(axioms[a]);
    std::cout << aname << std::string(17 - std::min<std::size_t>(17, aname.size()), ' ');
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const AuditCell& cell = report.cells[r][a];
      std::string mark = !cell.run ? "." : (cell.verdict.violated ? "✗" : "✓");
      if (!cell.matches()) {
        mark += "!";
        all_match = false;
      }
      std::cout << mark << std::string(width > mark.size() ? width - mark.size() : 1, ' ');
      std::string outcome = !cell.run ? "skipped" : (cell.verdict.violated ? "violated" : "none-found");
      std::string witness_file;
      if (cell.run && cell.verdict.violated && cell.verdict.witness) {
        witness_file = "witness_" + rule_name(rules[r]) + "_" + aname + ".txt";
        write_file(fs::path(args.out_dir) / witness_file, witness_text(*cell.verdict.witness));
      }
      csv += rule_name(rules[r]) + "," + aname + "," + outcome + "," + witness_file + "\n";
    }
    std::cout << '\n';
  }
  write_file(fs::path(args.out_dir) / "audit.csv", csv);
  if (!all_match) {
    std::cerr << "error: E_AUDIT: observed matrix deviates from the reference matrix\n";
    return 4;
  }
  std::cout << "matrix matches the reference (trials=" << report.trials
            << ", seed=" << report.seed << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------
// experiments

struct ExperimentArgs {
  std::uint64_t seed = 1;
  int reps = 20;
  int threads = 1;
  std::vector<std::uint64_t> x_values;
  std::vector<double> p_values;
  std::vector<std::uint64_t> limits;
  std::vector<std::string> rule_names;
  std::string out_dir = "exp-out";
};

std::vector<RuleSpec> rules_from_args(const ExperimentArgs& args) {
  if (args.rule_names.empty()) return builtin_rules();
  std::vector<RuleSpec> rules;
  for (const auto& name : args.rule_names) rules.push_back(rule_from_name(name));
  return rules;
}

int run_experiment_one_two(int which, const ExperimentArgs& args) {
  fs::create_directories(args.out_dir);
  std::vector<std::uint64_t> xs = args.x_values;
  if (xs.empty()) {
    xs = which == 1 ? std::vector<std::uint64_t>{10, 30, 90, 190}
                    : std::vector<std::uint64_t>{0, 10, 50, 70, 100};
  }
  std::vector<RuleSpec> rules = rules_from_args(args);
  std::string prefix = which == 1 ? "exp1" : "exp2";
  write_run_log(args.out_dir, prefix + " seed=" + std::to_string(args.seed) +
                                  " reps=" + std::to_string(args.reps));

  std::string bins_csv = "x,rule,bx,by,funds\n";
  std::string summary_csv = "x,rule,cheap_funds,expensive_funds,total_funds\n";
  for (std::uint64_t x : xs) {
    ExperimentRun run;
    if (which == 1) {
      if (x < 1) throw Error("experiment one requires x >= 1");
      run.config = exp1_config(x);
    } else {
      if (x > 100) throw Error("experiment two requires 0 <= x <= 100");
      run.config = exp2_config(static_cast<int>(x));
    }
    run.rules = rules;
    run.repetitions = args.reps;
    run.seed = args.seed;
    run.threads = args.threads;
    auto stats = run_experiment(run);
    for (const auto& st : stats) {
      std::string tag = prefix + "_x" + std::to_string(x) + "_" + rule_name(st.rule);
      write_file(fs::path(args.out_dir) / (tag + ".pgm"), histogram_to_pgm(st.hist));
      for (int by = 0; by < Histogram::kBins; ++by) {
        for (int bx = 0; bx < Histogram::kBins; ++bx) {
          bins_csv += std::to_string(x) + "," + rule_name(st.rule) + "," + std::to_string(bx) +
                      "," + std::to_string(by) + "," + std::to_string(st.hist.at(bx, by)) + "\n";
        }
      }
      summary_csv += std::to_string(x) + "," + rule_name(st.rule) + "," +
                     std::to_string(st.group_funds[0]) + "," + std::to_string(st.group_funds[1]) +
                     "," + std::to_string(st.total_funds) + "\n";
    }
  }
  write_file(fs::path(args.out_dir) / "bins.csv", bins_csv);
  write_file(fs::path(args.out_dir) / "summary.csv", summary_csv);
  std::cout << "wrote " << args.out_dir << " (" << xs.size() << " x-values, " << rules.size()
            << " rules, " << args.reps << " repetitions)\n";
  return 0;
}

int run_experiment_three(const ExperimentArgs& args) {
  fs::create_directories(args.out_dir);
  std::vector<double> ps = args.p_values;
  if (ps.empty()) ps = {0, 0.25, 0.5, 0.75, 1};
  std::vector<std::uint64_t> limits = args.limits;
  if (limits.empty()) limits = {20, 30, 50};
  std::vector<RuleSpec> rules = rules_from_args(args);
  write_run_log(args.out_dir, "exp3 seed=" + std::to_string(args.seed) +
                                  " reps=" + std::to_string(args.reps));

  std::string bins_csv = "limit,p,rule,bx,by,funds\n";
  for (std::uint64_t limit : limits) {
    std::string local_csv = "p,rule,avg_local_funds\n";
    for (double p : ps) {
      if (p < 0 || p > 1) throw Error("experiment three requires p in [0,1]");
      ExperimentRun run;
      run.config = exp3_config(p, limit);
      run.rules = rules;
      run.repetitions = args.reps;
      run.seed = args.seed;
      run.threads = args.threads;
      auto stats = run_experiment(run);
      for (const auto& st : stats) {
        std::string tag = "exp3_l" + std::to_string(limit) + "_p" + format_double(p) + "_" +
                          rule_name(st.rule);
        write_file(fs::path(args.out_dir) / (tag + ".pgm"), histogram_to_pgm(st.hist));
        for (int by = 0; by < Histogram::kBins; ++by) {
          for (int bx = 0; bx < Histogram::kBins; ++bx) {
            bins_csv += std::to_string(limit) + "," + format_double(p) + "," +
                        rule_name(st.rule) + "," + std::to_string(bx) + "," + std::to_string(by) +
                        "," + std::to_string(st.hist.at(bx, by)) + "\n";
          }
        }
        double avg_local =
            static_cast<double>(st.group_funds[1]) / static_cast<double>(args.reps);
        char avg[64];
        std::snprintf(avg, sizeof(avg), "%.6f", avg_local);
        local_csv += format_double(p) + "," + rule_name(st.rule) + "," + avg + "\n";
      }
    }
    write_file(fs::path(args.out_dir) / ("local_funds_l" + std::to_string(limit) + ".csv"),
               local_csv);
    if (limits.size() == 1) {
      write_file(fs::path(args.out_dir) / "local_funds.csv", local_csv);
    }
  }
  write_file(fs::path(args.out_dir) / "bins.csv", bins_csv);
  std::cout << "wrote " << args.out_dir << " (" << ps.size() << " p-values, " << limits.size()
            << " limits, " << rules.size() << " rules, " << args.reps << " repetitions)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approval-based participatory budgeting: solvers, axiom audit, experiments"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "",
                 "read options from a key = value file ([subcommand] sections)");
  app.require_subcommand(0, 1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "compute the winning budget of a scenario file");
  solve_cmd->add_option("--scenario", solve_args.scenario_path, "scenario file (canonical format)")
      ->required()
      ->check(CLI::ExistingFile);
  solve_cmd->add_option("--approach", solve_args.approach, "max | greedy | propgreedy")
      ->required();
  solve_cmd
      ->add_option("--satisfaction", solve_args.satisfaction, "count | cover | cost | mincost")
      ->required();
  solve_cmd->add_option("--strategy", solve_args.strategy, "brute | bnb | dp | fpt (max only)");
  solve_cmd->add_option("--epsilon", solve_args.epsilon,
                        "FPTAS accuracy in (0,1) for max/cost");
  solve_cmd->add_flag("--positive-gain-only", solve_args.positive_gain_only,
                      "iterative rules skip zero-gain items");
  solve_cmd->add_flag("--kv", solve_args.kv, "machine-readable key=value output");
  solve_cmd->add_option("--brute-cap", solve_args.caps.brute_force_max_items,
                        "item cap for brute force");
  solve_cmd->add_option("--dp-cap", solve_args.caps.cost_dp_limit,
                        "limit cap for the cost dp");
  solve_cmd->add_option("--fpt-cap", solve_args.caps.fpt_max_voters,
                        "voter cap for the voter-subset dp");

  AxiomArgs axiom_args;
  auto* axioms_cmd =
      app.add_subcommand("axioms", "audit the nine rules against the reference axiom matrix");
  axioms_cmd->add_option("--trials", axiom_args.trials, "random perturbation tests per clean cell")
      ->check(CLI::PositiveNumber);
  axioms_cmd->add_option("--seed", axiom_args.seed, "audit seed");
  axioms_cmd->add_option("--rule", axiom_args.rule, "restrict to one rule (e.g. max-count)");
  axioms_cmd->add_option("--axiom", axiom_args.axiom,
                         "restrict to one axiom (budget, discount, splitting, merging, limit)");
  axioms_cmd->add_option("--out", axiom_args.out_dir, "output directory for CSV and witnesses");

  ExperimentArgs exp_args;
  auto* exp_cmd = app.add_subcommand("experiment", "run a built-in Euclidean experiment");
  exp_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* cmd, bool with_x, bool with_p) {
    cmd->add_option("--seed", exp_args.seed, "experiment seed");
    cmd->add_option("--reps", exp_args.reps, "repetitions per parameter value")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", exp_args.threads, "worker threads (output-invariant)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", exp_args.out_dir, "output directory");
    cmd->add_option("--rules", exp_args.rule_names, "subset of rules (default: all nine)")
        ->delimiter(',');
    if (with_x) cmd->add_option("--x", exp_args.x_values, "parameter grid")->delimiter(',');
    if (with_p) {
      cmd->add_option("--p", exp_args.p_values, "approval probability grid")->delimiter(',');
      cmd->add_option("--limit", exp_args.limits, "budget limits")->delimiter(',');
    }
  };
  auto* exp_one = exp_cmd->add_subcommand("one", "voter-side approvals, expensive cost sweep");
  auto* exp_two = exp_cmd->add_subcommand("two", "item-side approvals, reach sweep");
  auto* exp_three = exp_cmd->add_subcommand("three", "global vs local items");
  add_common(exp_one, true, false);
  add_common(exp_two, true, false);
  add_common(exp_three, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args);
    if (axioms_cmd->parsed()) return run_axioms(axiom_args);
    if (exp_cmd->parsed()) {
      if (exp_one->parsed()) return run_experiment_one_two(1, exp_args);
      if (exp_two->parsed()) return run_experiment_one_two(2, exp_args);
      if (exp_three->parsed()) return run_experiment_three(exp_args);
    }
    std::cerr << app.help();
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: E_PARSE: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: E_RESOURCE: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: E_VALIDATE: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: E_INTERNAL: " << e.what() << '\n';
    return 1;
  }
}
