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

#include "incontest/priority_sets.hpp"

#include <algorithm>
#include <functional>

#include "incontest/matching.hpp"
#include "incontest/properties.hpp"

namespace incontest {

bool is_high_priority_set(const Problem& p, StudentIdx i,
                          const std::vector<SchoolIdx>& schools) {
  if (schools.empty()) throw Error(Err::kEmptySet, "school set must be non-empty");
  if (i < 0 || i >= p.num_students()) throw Error(Err::kUnknownId, "bad student index");
  int total_seats = 0;
  std::vector<std::vector<int>> adj;  // one left vertex per seat
  for (int s : schools) {
    if (s < 0 || s >= p.num_schools()) throw Error(Err::kUnknownId, "bad school index");
    std::vector<int> above;
    for (int j : p.priority[s]) {
      if (j == i) break;
      above.push_back(j);
    }
    for (int seat = 0; seat < p.capacity[s]; ++seat) adj.push_back(above);
    total_seats += p.capacity[s];
  }
  const int matched = max_bipartite_matching(total_seats, p.num_students(), adj);
  return matched < total_seats;
}

TopPriorityVerdict smallest_top_priority_set(const Problem& p, StudentIdx i) {
  TopPriorityVerdict v;
  const auto& pref = p.prefs[i];
  std::vector<SchoolIdx> prefix;
  prefix.reserve(pref.size());
  for (int s : pref) {
    prefix.push_back(s);
    if (is_high_priority_set(p, i, prefix)) {
      v.has_top_priority_set = true;
      v.schools = prefix;
      return v;
    }
  }
  v.schools = pref;
  return v;
}

std::vector<int> guaranteed_outcomes(const Problem& p, StudentIdx i) {
  const TopPriorityVerdict v = smallest_top_priority_set(p, i);
  std::vector<int> out(v.schools.begin(), v.schools.end());
  if (!v.has_top_priority_set) out.push_back(kSelf);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TpsViolation> tps_violations(const Problem& p, const Assignment& a) {
  std::vector<TpsViolation> out;
  for (int i = 0; i < p.num_students(); ++i) {
    const TopPriorityVerdict v = smallest_top_priority_set(p, i);
    if (!v.has_top_priority_set) continue;
    // Membership in the smallest set implies membership in every larger one
    // (the candidates are nested prefixes).
    const bool inside = a.seat[i] != kSelf &&
                        std::find(v.schools.begin(), v.schools.end(), a.seat[i]) !=
                            v.schools.end();
    if (!inside) out.push_back({i, v.schools});
  }
  return out;
}

bool respects_top_priority_sets(const Problem& p, const Assignment& a) {
  return tps_violations(p, a).empty();
}

AuditReport incontestability_verdict(const Problem& p, const Assignment& a) {
  AuditReport report;
  const auto fill = fill_vector(p, a);
  const auto violations = tps_violations(p, a);
  for (int i = 0; i < p.num_students(); ++i) {
    if (a.seat[i] != kSelf && !p.acceptable(i, a.seat[i]))
      report.complaints.push_back({i, Complaint::Kind::kUnacceptableSeat, -1, {}});
    for (int s : p.prefs[i]) {
      if (!p.prefers(i, s, a.seat[i])) break;
      if (fill[s] < p.capacity[s]) {
        report.complaints.push_back({i, Complaint::Kind::kWastedSeat, s, {}});
        break;  // one witness per student: her best wasted school
      }
    }
    for (const auto& v : violations)
      if (v.student == i)
        report.complaints.push_back({i, Complaint::Kind::kTopPriorityViolation, -1, v.set});
  }
  report.incontestable = report.complaints.empty();
  return report;
}

bool is_comprehensive(const Problem& p, const Assignment& a,
                      const std::vector<SchoolIdx>& schools) {
  if (schools.empty()) throw Error(Err::kEmptySet, "school set must be non-empty");
  std::vector<bool> in_set(p.num_schools(), false);
  for (int s : schools) in_set[s] = true;
  for (int s : schools) {
    // Everyone strictly above the worst occupant of s must hold a seat in the
    // set; the other occupants of s qualify automatically.
    int worst = -1;
    for (int i = 0; i < p.num_students(); ++i)
      if (a.seat[i] == s) worst = std::max(worst, p.rank[s][i]);
    for (int r = 0; r < worst; ++r) {
      const int j = p.priority[s][r];
      if (a.seat[j] == kSelf || !in_set[a.seat[j]]) return false;
    }
  }
  return true;
}

Assignment construct_saturating_comprehensive(const Problem& p, StudentIdx i,
                                              const std::vector<SchoolIdx>& schools) {
  if (is_high_priority_set(p, i, schools))
    throw Error(Err::kIsHighPrioritySet,
                "no saturating assignment from higher-priority students exists");
  std::vector<int> seat(p.num_students(), kSelf);
  std::vector<bool> used(p.num_students(), false);
  Assignment result;
  bool found = false;

  // Schools in given order; per school, choose capacity-many students from
  // the upper contour in priority order. First comprehensive hit wins.
  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == schools.size()) {
      Assignment cand = make_assignment(p, seat);
      if (is_comprehensive(p, cand, schools)) {
        result = std::move(cand);
        found = true;
        return true;
      }
      return false;
    }
    const int s = schools[k];
    const auto above = upper_contour(p, i, s);
    const int need = p.capacity[s];
    std::vector<int> chosen;
    std::function<bool(size_t)> pick = [&](size_t from) -> bool {
      if (static_cast<int>(chosen.size()) == need) return rec(k + 1);
      for (size_t t = from; t < above.size(); ++t) {
        const int j = above[t];
        if (used[j]) continue;
        used[j] = true;
        seat[j] = s;
        chosen.push_back(j);
        if (pick(t + 1)) return true;
        chosen.pop_back();
        seat[j] = kSelf;
        used[j] = false;
      }
      return false;
    };
    return pick(0);
  };
  rec(0);
  if (!found)
    throw Error(Err::kPreconditionViolated,
                "saturating assignments exist but none is comprehensive");
  return result;
}

}  // namespace incontest
