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

#include "incontest/model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <unordered_set>

namespace incontest {

const char* err_name(Err code) {
  switch (code) {
    case Err::kDuplicateId: return "DuplicateId";
    case Err::kUnknownSchoolInPreference: return "UnknownSchoolInPreference";
    case Err::kIncompletePriority: return "IncompletePriority";
    case Err::kNonPositiveCapacity: return "NonPositiveCapacity";
    case Err::kUnknownId: return "UnknownId";
    case Err::kEmptySet: return "EmptySet";
    case Err::kInconsistentAssignment: return "InconsistentAssignment";
    case Err::kInstanceTooLarge: return "InstanceTooLarge";
    case Err::kBudgetExceeded: return "BudgetExceeded";
    case Err::kIsHighPrioritySet: return "IsHighPrioritySet";
    case Err::kInvalidPeriod: return "InvalidPeriod";
    case Err::kListCapExceeded: return "ListCapExceeded";
    case Err::kPreconditionViolated: return "PreconditionViolated";
    case Err::kBadMechanismSpec: return "BadMechanismSpec";
    case Err::kParseError: return "ParseError";
  }
  return "UnknownError";
}

int Problem::total_seats() const {
  return std::accumulate(capacity.begin(), capacity.end(), 0);
}

StudentIdx Problem::student_index(const std::string& name) const {
  for (int i = 0; i < num_students(); ++i)
    if (student_names[i] == name) return i;
  throw Error(Err::kUnknownId, "unknown student id: " + name);
}

SchoolIdx Problem::school_index(const std::string& name) const {
  for (int s = 0; s < num_schools(); ++s)
    if (school_names[s] == name) return s;
  throw Error(Err::kUnknownId, "unknown school id: " + name);
}

namespace {

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw Error(Err::kDuplicateId, std::string("duplicate ") + what + " id: " + n);
}

void rebuild_pref_pos(Problem& p, StudentIdx i) {
  auto& row = p.pref_pos[i];
  row.assign(p.num_schools(), -1);
  for (int pos = 0; pos < static_cast<int>(p.prefs[i].size()); ++pos)
    row[p.prefs[i][pos]] = pos;
}

}  // namespace

Problem make_problem(std::vector<std::string> student_names,
                     std::vector<std::string> school_names,
                     std::vector<int> capacity,
                     std::vector<std::vector<SchoolIdx>> prefs,
                     std::vector<std::vector<StudentIdx>> priority) {
  Problem p;
  p.student_names = std::move(student_names);
  p.school_names = std::move(school_names);
  p.capacity = std::move(capacity);
  p.prefs = std::move(prefs);
  p.priority = std::move(priority);

  const int n = p.num_students();
  const int m = p.num_schools();
  check_unique(p.student_names, "student");
  check_unique(p.school_names, "school");
  for (const auto& sn : p.school_names)
    for (const auto& in : p.student_names)
      if (sn == in)
        throw Error(Err::kDuplicateId, "id used for both student and school: " + sn);

  if (static_cast<int>(p.capacity.size()) != m)
    throw Error(Err::kNonPositiveCapacity, "capacity vector size mismatch");
  for (int s = 0; s < m; ++s)
    if (p.capacity[s] < 1)
      throw Error(Err::kNonPositiveCapacity,
                  "capacity must be >= 1 for school " + p.school_names[s]);

  if (static_cast<int>(p.prefs.size()) != n)
    throw Error(Err::kParseError, "preference rows do not match student set");
  for (int i = 0; i < n; ++i) {
    std::unordered_set<int> seen;
    for (int s : p.prefs[i]) {
      if (s < 0 || s >= m)
        throw Error(Err::kUnknownSchoolInPreference,
                    "preference of " + p.student_names[i] + " mentions unknown school");
      if (!seen.insert(s).second)
        throw Error(Err::kDuplicateId, "preference of " + p.student_names[i] +
                                           " repeats school " + p.school_names[s]);
    }
  }

  if (static_cast<int>(p.priority.size()) != m)
    throw Error(Err::kIncompletePriority, "priority rows do not match school set");
  for (int s = 0; s < m; ++s) {
    if (static_cast<int>(p.priority[s].size()) != n)
      throw Error(Err::kIncompletePriority,
                  "priority order of " + p.school_names[s] + " must rank every student");
    std::vector<bool> seen(n, false);
    for (int i : p.priority[s]) {
      if (i < 0 || i >= n || seen[i])
        throw Error(Err::kIncompletePriority,
                    "priority order of " + p.school_names[s] + " is not a permutation");
      seen[i] = true;
    }
  }

  p.rank.assign(m, std::vector<int>(n, 0));
  for (int s = 0; s < m; ++s)
    for (int pos = 0; pos < n; ++pos) p.rank[s][p.priority[s][pos]] = pos;
  p.pref_pos.assign(n, {});
  for (int i = 0; i < n; ++i) rebuild_pref_pos(p, i);
  return p;
}

void replace_pref(Problem& p, StudentIdx i, const std::vector<SchoolIdx>& pref) {
  p.prefs[i] = pref;
  rebuild_pref_pos(p, i);
}

Problem with_pref(const Problem& p, StudentIdx i, const std::vector<SchoolIdx>& pref) {
  Problem q = p;
  replace_pref(q, i, pref);
  return q;
}

Problem with_prefs(const Problem& p, std::vector<std::vector<SchoolIdx>> prefs) {
  Problem q = p;
  q.prefs = std::move(prefs);
  for (int i = 0; i < q.num_students(); ++i) rebuild_pref_pos(q, i);
  return q;
}

std::vector<StudentIdx> upper_contour(const Problem& p, StudentIdx i, SchoolIdx s) {
  std::vector<StudentIdx> out;
  for (int j : p.priority[s]) {
    if (j == i) break;
    out.push_back(j);
  }
  return out;
}

std::vector<SchoolIdx> truncated(const std::vector<SchoolIdx>& pref, int k) {
  if (k < 0) throw Error(Err::kInvalidPeriod, "truncation length must be >= 0");
  if (k >= static_cast<int>(pref.size())) return pref;
  return std::vector<SchoolIdx>(pref.begin(), pref.begin() + k);
}

Problem restrict_problem(const Problem& p, const std::vector<bool>& drop_student,
                         const std::vector<bool>& drop_school,
                         const std::vector<int>& new_capacity) {
  std::vector<std::string> students, schools;
  std::vector<int> caps;
  std::vector<int> smap(p.num_students(), -1), cmap(p.num_schools(), -1);
  for (int i = 0; i < p.num_students(); ++i)
    if (!drop_student[i]) {
      smap[i] = static_cast<int>(students.size());
      students.push_back(p.student_names[i]);
    }
  for (int s = 0; s < p.num_schools(); ++s)
    if (!drop_school[s]) {
      cmap[s] = static_cast<int>(schools.size());
      schools.push_back(p.school_names[s]);
      caps.push_back(new_capacity[s]);
    }
  std::vector<std::vector<int>> prefs, prio;
  for (int i = 0; i < p.num_students(); ++i) {
    if (drop_student[i]) continue;
    std::vector<int> row;
    for (int s : p.prefs[i])
      if (cmap[s] >= 0) row.push_back(cmap[s]);
    prefs.push_back(std::move(row));
  }
  for (int s = 0; s < p.num_schools(); ++s) {
    if (drop_school[s]) continue;
    std::vector<int> row;
    for (int i : p.priority[s])
      if (smap[i] >= 0) row.push_back(smap[i]);
    prio.push_back(std::move(row));
  }
  return make_problem(std::move(students), std::move(schools), std::move(caps),
                      std::move(prefs), std::move(prio));
}

Problem reduce_problem(const Problem& p, StudentIdx i, SchoolIdx s) {
  if (i < 0 || i >= p.num_students()) throw Error(Err::kUnknownId, "reduce: bad student");
  if (s < 0 || s >= p.num_schools()) throw Error(Err::kUnknownId, "reduce: bad school");
  std::vector<bool> drop_student(p.num_students(), false);
  std::vector<bool> drop_school(p.num_schools(), false);
  std::vector<int> caps = p.capacity;
  drop_student[i] = true;
  if (p.capacity[s] == 1)
    drop_school[s] = true;
  else
    caps[s] = p.capacity[s] - 1;
  return restrict_problem(p, drop_student, drop_school, caps);
}

Assignment make_assignment(const Problem& p, std::vector<int> seat) {
  if (static_cast<int>(seat.size()) != p.num_students())
    throw Error(Err::kInconsistentAssignment, "seat vector size mismatch");
  std::vector<int> fill(p.num_schools(), 0);
  for (int i = 0; i < p.num_students(); ++i) {
    const int v = seat[i];
    if (v == kSelf) continue;
    if (v < 0 || v >= p.num_schools())
      throw Error(Err::kInconsistentAssignment,
                  "seat of " + p.student_names[i] + " is not a school");
    if (++fill[v] > p.capacity[v])
      throw Error(Err::kInconsistentAssignment,
                  "capacity exceeded at " + p.school_names[v]);
  }
  Assignment a;
  a.seat = std::move(seat);
  return a;
}

std::vector<std::vector<StudentIdx>> rosters(const Problem& p, const Assignment& a) {
  std::vector<std::vector<StudentIdx>> r(p.num_schools());
  for (int i = 0; i < p.num_students(); ++i)
    if (a.seat[i] != kSelf) r[a.seat[i]].push_back(i);
  return r;
}

std::vector<int> fill_vector(const Problem& p, const Assignment& a) {
  std::vector<int> fill(p.num_schools(), 0);
  for (int i = 0; i < p.num_students(); ++i)
    if (a.seat[i] != kSelf) ++fill[a.seat[i]];
  return fill;
}

ExPostInfo expost_info(const Problem& p, const Assignment& a, StudentIdx i) {
  if (i < 0 || i >= p.num_students()) throw Error(Err::kUnknownId, "expost: bad student");
  ExPostInfo info;
  info.student = i;
  info.pref = p.prefs[i];
  info.own_seat = a.seat[i];
  info.fill = fill_vector(p, a);
  return info;
}

MechanismSpec parse_mechanism_spec(const std::string& text) {
  MechanismSpec spec;
  std::string body = text;
  if (auto at = body.find('@'); at != std::string::npos) {
    const std::string suffix = body.substr(at + 1);
    body = body.substr(0, at);
    if (suffix.rfind("k=", 0) != 0)
      throw Error(Err::kBadMechanismSpec, "expected @k=<K> suffix in: " + text);
    int cap = 0;
    const char* first = suffix.data() + 2;
    const char* last = suffix.data() + suffix.size();
    auto res = std::from_chars(first, last, cap);
    if (res.ec != std::errc() || res.ptr != last || cap < 1)
      throw Error(Err::kBadMechanismSpec, "list cap must be a positive integer: " + text);
    spec.list_cap = cap;
  }
  if (auto colon = body.find(':'); colon != std::string::npos) {
    const std::string name = body.substr(0, colon);
    if (name != "ar")
      throw Error(Err::kBadMechanismSpec, "only ar takes a parameter: " + text);
    int e = 0;
    const std::string arg = body.substr(colon + 1);
    const char* first = arg.data();
    const char* last = arg.data() + arg.size();
    auto res = std::from_chars(first, last, e);
    if (res.ec != std::errc() || res.ptr != last)
      throw Error(Err::kBadMechanismSpec, "bad ar parameter: " + text);
    if (e < 1) throw Error(Err::kInvalidPeriod, "ar period must be >= 1");
    spec.kind = MechanismSpec::Kind::kAr;
    spec.period = e;
    return spec;
  }
  using K = MechanismSpec::Kind;
  if (body == "sosm") spec.kind = K::kSosm;
  else if (body == "boston") spec.kind = K::kBoston;
  else if (body == "ttc") spec.kind = K::kTtc;
  else if (body == "seadam") spec.kind = K::kSeadam;
  else if (body == "ct") spec.kind = K::kCt;
  else if (body == "fct") spec.kind = K::kFct;
  else if (body == "ettc") spec.kind = K::kEttc;
  else if (body == "ar") throw Error(Err::kBadMechanismSpec, "ar requires :<e>");
  else throw Error(Err::kBadMechanismSpec, "unknown mechanism: " + text);
  return spec;
}

std::string to_string(const MechanismSpec& spec) {
  using K = MechanismSpec::Kind;
  std::string out;
  switch (spec.kind) {
    case K::kSosm: out = "sosm"; break;
    case K::kBoston: out = "boston"; break;
    case K::kTtc: out = "ttc"; break;
    case K::kSeadam: out = "seadam"; break;
    case K::kCt: out = "ct"; break;
    case K::kFct: out = "fct"; break;
    case K::kEttc: out = "ettc"; break;
    case K::kAr: out = "ar:" + std::to_string(spec.period); break;
  }
  if (spec.list_cap > 0) out += "@k=" + std::to_string(spec.list_cap);
  return out;
}

}  // namespace incontest
