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

#ifndef INCONTEST_MODEL_HPP_
#define INCONTEST_MODEL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "incontest/error.hpp"

namespace incontest {

using StudentIdx = int;
using SchoolIdx = int;

// Outcome value for a student who keeps her outside option.
inline constexpr int kSelf = -1;

// A school-choice problem. Identifiers are interned to dense indices; all
// iteration follows declaration order, which is the canonical order
// everywhere (determinism contract).
//
// Preference lists hold only the acceptable schools, best first. Relative
// order among unacceptable schools is never represented: every predicate in
// this library depends only on the acceptable prefix and the position of the
// outside option.
struct Problem {
  std::vector<std::string> student_names;
  std::vector<std::string> school_names;
  std::vector<int> capacity;               // per school, >= 1
  std::vector<std::vector<SchoolIdx>> prefs;     // per student, best first
  std::vector<std::vector<StudentIdx>> priority; // per school, best first, complete

  // Derived tables, kept consistent by make_problem / replace_pref.
  std::vector<std::vector<int>> rank;      // rank[s][i] = position of i in priority[s]
  std::vector<std::vector<int>> pref_pos;  // pref_pos[i][s] = position in prefs[i], -1 if unacceptable

  int num_students() const { return static_cast<int>(student_names.size()); }
  int num_schools() const { return static_cast<int>(school_names.size()); }
  int total_seats() const;

  bool acceptable(StudentIdx i, SchoolIdx s) const { return pref_pos[i][s] >= 0; }

  // Position of outcome v (school or kSelf) in student i's ranking of
  // outcomes: acceptable schools by list position, then self, then all
  // unacceptable schools sharing one sentinel rank.
  int outcome_rank(StudentIdx i, int v) const {
    const int n = static_cast<int>(prefs[i].size());
    if (v == kSelf) return n;
    const int pos = pref_pos[i][v];
    return pos >= 0 ? pos : n + 1;
  }

  // v strictly before w for student i. Distinct unacceptable schools are
  // incomparable and compare false both ways.
  bool prefers(StudentIdx i, int v, int w) const {
    return outcome_rank(i, v) < outcome_rank(i, w);
  }
  bool weakly_prefers(StudentIdx i, int v, int w) const {
    return v == w || prefers(i, v, w);
  }

  StudentIdx student_index(const std::string& name) const;  // throws UnknownId
  SchoolIdx school_index(const std::string& name) const;    // throws UnknownId

  bool operator==(const Problem& o) const {
    return student_names == o.student_names && school_names == o.school_names &&
           capacity == o.capacity && prefs == o.prefs && priority == o.priority;
  }
};

// Validates and interns a problem. Throws Error with codes kDuplicateId,
// kUnknownSchoolInPreference, kIncompletePriority, kNonPositiveCapacity.
Problem make_problem(std::vector<std::string> student_names,
                     std::vector<std::string> school_names,
                     std::vector<int> capacity,
                     std::vector<std::vector<SchoolIdx>> prefs,
                     std::vector<std::vector<StudentIdx>> priority);

// Copy with one student's preference list swapped; derived tables updated.
Problem with_pref(const Problem& p, StudentIdx i, const std::vector<SchoolIdx>& pref);

// Copy with all preference lists swapped.
Problem with_prefs(const Problem& p, std::vector<std::vector<SchoolIdx>> prefs);

// In-place variant for enumeration hot paths. The caller owns `p`.
void replace_pref(Problem& p, StudentIdx i, const std::vector<SchoolIdx>& pref);

// Students strictly above i at school s, in priority order.
std::vector<StudentIdx> upper_contour(const Problem& p, StudentIdx i, SchoolIdx s);

// First min(k, size) entries of a preference list.
std::vector<SchoolIdx> truncated(const std::vector<SchoolIdx>& pref, int k);

// Removes student i and one seat of school s; a school reduced to zero seats
// disappears from the school set and from every preference list. Relative
// orders are preserved. Indices are re-interned; names are stable.
Problem reduce_problem(const Problem& p, StudentIdx i, SchoolIdx s);

// General restriction used by mechanism rounds: drop the flagged students and
// schools, set explicit leftover capacities for the kept schools.
Problem restrict_problem(const Problem& p, const std::vector<bool>& drop_student,
                         const std::vector<bool>& drop_school,
                         const std::vector<int>& new_capacity);

// An assignment of students to school seats; kSelf marks the outside option.
struct Assignment {
  std::vector<int> seat;  // per student: school index or kSelf

  bool operator==(const Assignment& o) const { return seat == o.seat; }
};

// Validates seat vector against capacities. Throws kInconsistentAssignment.
Assignment make_assignment(const Problem& p, std::vector<int> seat);

// Occupants per school, students in index order.
std::vector<std::vector<StudentIdx>> rosters(const Problem& p, const Assignment& a);

// Number of occupied seats per school.
std::vector<int> fill_vector(const Problem& p, const Assignment& a);

// What a student knows before seeing the outcome: the frame (everything in
// `frame` except preference lists) plus her own submitted list.
struct InterimInfo {
  StudentIdx student;
  std::vector<SchoolIdx> pref;
};

// Interim knowledge plus her own seat and every school's seat count.
struct ExPostInfo {
  StudentIdx student;
  std::vector<SchoolIdx> pref;
  int own_seat = kSelf;          // school index or kSelf
  std::vector<int> fill;         // per school
};

ExPostInfo expost_info(const Problem& p, const Assignment& a, StudentIdx i);

// Parsed mechanism selector, e.g. "boston", "ar:2", "ttc@k=3".
struct MechanismSpec {
  enum class Kind { kSosm, kBoston, kTtc, kSeadam, kCt, kFct, kEttc, kAr };
  Kind kind = Kind::kSosm;
  int period = 0;    // rounds-per-segment, Ar only, >= 1
  int list_cap = 0;  // 0 = unbounded; otherwise maximum submitted list length

  bool operator==(const MechanismSpec& o) const {
    return kind == o.kind && period == o.period && list_cap == o.list_cap;
  }
};

MechanismSpec parse_mechanism_spec(const std::string& text);  // throws kBadMechanismSpec / kInvalidPeriod
std::string to_string(const MechanismSpec& spec);

}  // namespace incontest

#endif  // INCONTEST_MODEL_HPP_
