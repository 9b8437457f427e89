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

#include "pb/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace pb {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // A terminal newline produces one empty trailing piece; drop it so the
  // line count matches the logical line count.
  if (!lines.empty() && lines.back().empty() && !text.empty() && text.back() == '\n') {
    lines.pop_back();
  }
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_u64(std::string_view token, int line_no, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

constexpr int kMaxDimension = 1'000'000;  // sanity bound on m and n

}  // namespace

Scenario::Scenario(std::vector<Cost> costs, std::vector<std::vector<int>> approvals, Cost limit)
    : limit_(limit) {
  items_.reserve(costs.size());
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (costs[i] == 0) throw Error("item " + std::to_string(i) + " has zero cost");
    items_.push_back(Item{static_cast<int>(i), costs[i]});
  }
  voters_.reserve(approvals.size());
  for (std::size_t v = 0; v < approvals.size(); ++v) {
    auto& ids = approvals[v];
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int id : ids) {
      if (id < 0 || id >= item_count()) {
        throw Error("voter " + std::to_string(v) + " approves unknown item " + std::to_string(id));
      }
    }
    voters_.push_back(ApprovalSet{static_cast<int>(v), std::move(ids)});
  }
}

Cost Scenario::total_item_cost() const {
  Cost sum = 0;
  for (const Item& it : items_) sum += it.cost;
  return sum;
}

Budget Budget::of(const Scenario& s, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Cost sum = 0;
  for (int id : ids) {
    if (id < 0 || id >= s.item_count()) {
      throw MalformedBudgetError("budget refers to unknown item " + std::to_string(id));
    }
    sum += s.cost(id);
  }
  return Budget{std::move(ids), sum};
}

bool Budget::contains(int id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

const std::vector<RuleSpec>& builtin_rules() {
  static const std::vector<RuleSpec> rules = {
      {Approach::Max, SatisfactionFn::CountApproved},
      {Approach::Greedy, SatisfactionFn::CountApproved},
      {Approach::PropGreedy, SatisfactionFn::CountApproved},
      {Approach::Max, SatisfactionFn::CoverIndicator},
      {Approach::Greedy, SatisfactionFn::CoverIndicator},
      {Approach::PropGreedy, SatisfactionFn::CoverIndicator},
      {Approach::Max, SatisfactionFn::CostApproved},
      {Approach::Greedy, SatisfactionFn::CostApproved},
      {Approach::PropGreedy, SatisfactionFn::CostApproved},
  };
  return rules;
}

std::string approach_name(Approach a) {
  switch (a) {
    case Approach::Max: return "max";
    case Approach::Greedy: return "greedy";
    case Approach::PropGreedy: return "propgreedy";
  }
  throw InternalError("unknown approach");
}

std::string satisfaction_name(SatisfactionFn fn);  // defined in satisfaction.cpp

std::string rule_name(const RuleSpec& r) {
  return approach_name(r.approach) + "-" + satisfaction_name(r.satisfaction);
}

bool feasibility_check(const Scenario& s, const Budget& b) {
  Cost sum = 0;
  for (int id : b.members) {
    if (id < 0 || id >= s.item_count()) {
      throw MalformedBudgetError("budget refers to unknown item " + std::to_string(id));
    }
    sum += s.cost(id);
  }
  return sum <= s.limit();
}

bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = a.size();
  std::size_t j = b.size();
  while (i > 0 && j > 0) {
    if (a[i - 1] != b[j - 1]) return a[i - 1] < b[j - 1];
    --i;
    --j;
  }
  return i == 0 && j > 0;
}

bool canonical_less(const Budget& a, const Budget& b) {
  if (a.total_cost != b.total_cost) return a.total_cost < b.total_cost;
  return colex_less(a.members, b.members);
}

Budget canonical_tiebreak(const std::vector<Budget>& candidates) {
  if (candidates.empty()) throw InternalError("canonical_tiebreak on empty candidate list");
  const Budget* best = &candidates.front();
  for (const Budget& c : candidates) {
    if (canonical_less(c, *best)) best = &c;
  }
  return *best;
}

Scenario parse_scenario(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");

  auto header = tokenize(lines[0]);
  if (header.size() != 3) {
    throw ParseError(1, "header must be 'm n limit' (got " + std::to_string(header.size()) +
                            " tokens)");
  }
  std::uint64_t m64 = parse_u64(header[0], 1, "item count");
  std::uint64_t n64 = parse_u64(header[1], 1, "voter count");
  Cost limit = parse_u64(header[2], 1, "limit");
  if (m64 > kMaxDimension || n64 > kMaxDimension) {
    throw ParseError(1, "dimensions out of range");
  }
  int m = static_cast<int>(m64);
  int n = static_cast<int>(n64);

  if (lines.size() < 2) throw ParseError(2, "missing cost line");
  auto cost_tokens = tokenize(lines[1]);
  if (static_cast<int>(cost_tokens.size()) != m) {
    throw ParseError(2, "expected " + std::to_string(m) + " costs, got " +
                            std::to_string(cost_tokens.size()));
  }
  std::vector<Cost> costs(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    costs[static_cast<std::size_t>(i)] = parse_u64(cost_tokens[static_cast<std::size_t>(i)], 2, "cost");
    if (costs[static_cast<std::size_t>(i)] == 0) throw ParseError(2, "item cost must be positive");
  }

  if (static_cast<int>(lines.size()) < 2 + n) {
    throw ParseError(static_cast<int>(lines.size()) + 1, "missing voter line");
  }
  std::vector<std::vector<int>> approvals(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int line_no = 3 + v;
    for (auto token : tokenize(lines[static_cast<std::size_t>(2 + v)])) {
      std::uint64_t id = parse_u64(token, line_no, "item id");
      if (id >= m64) {
        throw ParseError(line_no, "item id " + std::to_string(id) + " out of range");
      }
      approvals[static_cast<std::size_t>(v)].push_back(static_cast<int>(id));
    }
  }
  for (std::size_t extra = static_cast<std::size_t>(2 + n); extra < lines.size(); ++extra) {
    if (!tokenize(lines[extra]).empty()) {
      throw ParseError(static_cast<int>(extra) + 1, "unexpected content after voter lines");
    }
  }
  return Scenario(std::move(costs), std::move(approvals), limit);
}

std::string serialize_scenario(const Scenario& s) {
  std::string out;
  out += std::to_string(s.item_count());
  out += ' ';
  out += std::to_string(s.voter_count());
  out += ' ';
  out += std::to_string(s.limit());
  out += '\n';
  for (int i = 0; i < s.item_count(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(s.cost(i));
  }
  out += '\n';
  for (int v = 0; v < s.voter_count(); ++v) {
    const auto& ids = s.approved(v);
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(ids[k]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace pb
