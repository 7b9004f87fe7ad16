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

#ifndef INCONTEST_TESTS_HELPERS_HPP_
#define INCONTEST_TESTS_HELPERS_HPP_

#include <map>
#include <string>
#include <vector>

#include "incontest/json_io.hpp"
#include "incontest/model.hpp"

namespace test {

inline incontest::Problem fixture(const std::string& name) {
  return incontest::load_problem(std::string(FIXTURE_DIR) + "/" + name);
}

// Name-based construction, for readable test bodies.
inline incontest::Problem make_named(
    const std::vector<std::string>& students, const std::vector<std::string>& schools,
    const std::vector<int>& caps,
    const std::map<std::string, std::vector<std::string>>& prefs,
    const std::map<std::string, std::vector<std::string>>& prios) {
  auto school_idx = [&](const std::string& s) {
    for (std::size_t t = 0; t < schools.size(); ++t)
      if (schools[t] == s) return static_cast<int>(t);
    return -1;
  };
  auto student_idx = [&](const std::string& s) {
    for (std::size_t t = 0; t < students.size(); ++t)
      if (students[t] == s) return static_cast<int>(t);
    return -1;
  };
  std::vector<std::vector<int>> pv, rv;
  for (const auto& i : students) {
    std::vector<int> row;
    if (auto it = prefs.find(i); it != prefs.end())
      for (const auto& s : it->second) row.push_back(school_idx(s));
    pv.push_back(row);
  }
  for (const auto& s : schools) {
    std::vector<int> row;
    if (auto it = prios.find(s); it != prios.end())
      for (const auto& i : it->second) row.push_back(student_idx(i));
    rv.push_back(row);
  }
  return incontest::make_problem(students, schools, caps, pv, rv);
}

// Seat vector by student name -> school name ("" = outside option).
inline incontest::Assignment seats(const incontest::Problem& p,
                                   const std::map<std::string, std::string>& m) {
  std::vector<int> v(static_cast<std::size_t>(p.num_students()), incontest::kSelf);
  for (const auto& [stu, sch] : m)
    v[p.student_index(stu)] = sch.empty() ? incontest::kSelf : p.school_index(sch);
  return incontest::make_assignment(p, std::move(v));
}

inline std::string seat_name(const incontest::Problem& p, const incontest::Assignment& a,
                             const std::string& student) {
  const int v = a.seat[p.student_index(student)];
  return v == incontest::kSelf ? std::string("") : p.school_names[v];
}

// Definition-shaped re-implementations, kept independent of the library's
// algorithmic shortcuts.

inline bool naive_stable(const incontest::Problem& p, const incontest::Assignment& a) {
  const int n = p.num_students();
  const int m = p.num_schools();
  std::vector<int> fill(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < n; ++i) {
    if (a.seat[i] == incontest::kSelf) continue;
    if (!p.acceptable(i, a.seat[i])) return false;
    ++fill[a.seat[i]];
  }
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < m; ++s) {
      if (!p.prefers(i, s, a.seat[i])) continue;
      if (fill[s] < p.capacity[s]) return false;
      for (int j = 0; j < n; ++j)
        if (a.seat[j] == s && p.rank[s][i] < p.rank[s][j]) return false;
    }
  return true;
}

// Exhaustive Hall check: true iff the listed schools cannot be filled to
// capacity from students strictly above i, deciding by brute-force seat
// filling.
inline bool naive_high_priority(const incontest::Problem& p, int i,
                                const std::vector<int>& schools) {
  std::vector<int> seat_school;  // one entry per seat
  for (int s : schools)
    for (int q = 0; q < p.capacity[s]; ++q) seat_school.push_back(s);
  std::vector<char> used(static_cast<std::size_t>(p.num_students()), 0);
  auto dfs = [&](auto&& self, std::size_t t) -> bool {
    if (t == seat_school.size()) return true;
    const int s = seat_school[t];
    for (int j = 0; j < p.num_students(); ++j) {
      if (used[j] || p.rank[s][j] >= p.rank[s][i]) continue;
      used[j] = 1;
      if (self(self, t + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return !dfs(dfs, 0);
}

}  // namespace test

#endif  // INCONTEST_TESTS_HELPERS_HPP_
