// Copyright 2026 The incontest Authors
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

#include "incontest/properties.hpp"

#include <algorithm>
#include <functional>

namespace incontest {

bool is_individually_rational(const Problem& p, const Assignment& a) {
  for (int i = 0; i < p.num_students(); ++i)
    if (a.seat[i] != kSelf && !p.acceptable(i, a.seat[i])) return false;
  return true;
}

std::vector<std::pair<StudentIdx, SchoolIdx>> wasteful_witnesses(const Problem& p,
                                                                 const Assignment& a) {
  const auto fill = fill_vector(p, a);
  std::vector<std::pair<StudentIdx, SchoolIdx>> out;
  for (int i = 0; i < p.num_students(); ++i)
    for (int s : p.prefs[i]) {
      if (!p.prefers(i, s, a.seat[i])) break;  // prefs are scanned best-first
      if (fill[s] < p.capacity[s]) out.emplace_back(i, s);
    }
  return out;
}

bool is_non_wasteful(const Problem& p, const Assignment& a) {
  const auto fill = fill_vector(p, a);
  for (int i = 0; i < p.num_students(); ++i)
    for (int s : p.prefs[i]) {
      if (!p.prefers(i, s, a.seat[i])) break;  // prefs are scanned best-first
      if (fill[s] < p.capacity[s]) return false;
    }
  return true;
}

std::vector<std::tuple<StudentIdx, StudentIdx, SchoolIdx>> justified_envy_triples(
    const Problem& p, const Assignment& a) {
  const auto roster = rosters(p, a);
  std::vector<std::tuple<StudentIdx, StudentIdx, SchoolIdx>> out;
  for (int i = 0; i < p.num_students(); ++i)
    for (int s : p.prefs[i]) {
      if (!p.prefers(i, s, a.seat[i])) break;
      std::vector<StudentIdx> worse;
      for (int j : roster[s])
        if (p.rank[s][i] < p.rank[s][j]) worse.push_back(j);
      std::sort(worse.begin(), worse.end(),
                [&](int x, int y) { return p.rank[s][x] < p.rank[s][y]; });
      for (int j : worse) out.emplace_back(i, j, s);
    }
  return out;
}

bool is_stable(const Problem& p, const Assignment& a) {
  if (!is_individually_rational(p, a)) return false;
  const auto fill = fill_vector(p, a);
  const auto roster = rosters(p, a);
  for (int i = 0; i < p.num_students(); ++i)
    for (int s : p.prefs[i]) {
      if (!p.prefers(i, s, a.seat[i])) break;
      if (fill[s] < p.capacity[s]) return false;
      for (int j : roster[s])
        if (p.rank[s][i] < p.rank[s][j]) return false;
    }
  return true;
}

StabilityReport stability_report(const Problem& p, const Assignment& a) {
  StabilityReport r;
  r.individually_rational = is_individually_rational(p, a);
  r.wasteful = wasteful_witnesses(p, a);
  r.envy = justified_envy_triples(p, a);
  return r;
}

bool pareto_dominates(const Problem& p, const Assignment& a, const Assignment& b) {
  bool strict = false;
  for (int i = 0; i < p.num_students(); ++i) {
    if (!p.weakly_prefers(i, a.seat[i], b.seat[i])) return false;
    if (a.seat[i] != b.seat[i]) strict = true;
  }
  return strict;
}

namespace {

// Visits every capacity-feasible assignment in which each student gets an
// outcome she weakly prefers to her `base` outcome. Returns false from the
// visitor to stop early.
bool visit_weak_improvements(const Problem& p, const Assignment& base,
                             const std::function<bool(const Assignment&)>& visit) {
  const int n = p.num_students();
  std::vector<std::vector<int>> options(n);
  for (int i = 0; i < n; ++i) {
    // Weak upper contour of the base outcome: strictly better outcomes in
    // preference order, then the base outcome itself. The outside option
    // beats any unacceptable seat.
    for (int s : p.prefs[i])
      if (p.prefers(i, s, base.seat[i])) options[i].push_back(s);
    if (p.prefers(i, kSelf, base.seat[i])) options[i].push_back(kSelf);
    options[i].push_back(base.seat[i]);
  }
  std::vector<int> fill(p.num_schools(), 0);
  Assignment cur;
  cur.seat.assign(n, kSelf);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return visit(cur);
    for (int v : options[i]) {
      if (v != kSelf) {
        if (fill[v] == p.capacity[v]) continue;
        ++fill[v];
      }
      cur.seat[i] = v;
      const bool keep_going = rec(i + 1);
      if (v != kSelf) --fill[v];
      if (!keep_going) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace

bool is_efficient(const Problem& p, const Assignment& a, const EnumLimits& limits) {
  if (p.num_students() > limits.max_students || p.num_schools() > limits.max_schools)
    throw Error(Err::kInstanceTooLarge, "efficiency check is exhaustive; instance too large");
  bool dominated = false;
  visit_weak_improvements(p, a, [&](const Assignment& cand) {
    if (pareto_dominates(p, cand, a)) {
      dominated = true;
      return false;
    }
    return true;
  });
  return !dominated;
}

RhtReport check_generalized_rht(const Problem& p, const Assignment& dominating,
                                const Assignment& base) {
  if (!is_individually_rational(p, base) || !is_non_wasteful(p, base))
    throw Error(Err::kPreconditionViolated,
                "base assignment must be individually rational and non-wasteful");
  if (!pareto_dominates(p, dominating, base))
    throw Error(Err::kPreconditionViolated, "first assignment must Pareto dominate the base");

  RhtReport report;
  const auto fill_a = fill_vector(p, dominating);
  const auto fill_b = fill_vector(p, base);
  const auto roster_a = rosters(p, dominating);
  const auto roster_b = rosters(p, base);
  for (int s = 0; s < p.num_schools(); ++s) {
    if (fill_a[s] != fill_b[s]) report.failures.push_back({1, s});
    if (fill_b[s] < p.capacity[s] && roster_a[s] != roster_b[s])
      report.failures.push_back({2, s});
  }
  for (int i = 0; i < p.num_students(); ++i) {
    const bool matched_a = dominating.seat[i] != kSelf;
    const bool matched_b = base.seat[i] != kSelf;
    if (matched_a != matched_b) report.failures.push_back({3, i});
  }
  report.pass = report.failures.empty();
  return report;
}

}  // namespace incontest
