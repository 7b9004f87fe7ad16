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

#ifndef INCONTEST_PRIORITY_SETS_HPP_
#define INCONTEST_PRIORITY_SETS_HPP_

#include <vector>

#include "incontest/model.hpp"

namespace incontest {

// True iff the listed schools cannot all be filled to capacity using only
// students ranked above i. Decided by seat-expanded maximum bipartite
// matching (Hall condition), never by subset enumeration. Preference lists
// are not consulted, so `p` may be a bare frame. Throws kEmptySet on an empty
// school set.
bool is_high_priority_set(const Problem& p, StudentIdx i,
                          const std::vector<SchoolIdx>& schools);

struct TopPriorityVerdict {
  bool has_top_priority_set = false;
  // The smallest top-priority set when one exists; otherwise the student's
  // full acceptable list, with the outside option as an implicit member.
  std::vector<SchoolIdx> schools;
};

// Candidate sets are exactly the prefixes of the acceptable list; the first
// prefix passing the high-priority test is the smallest such set (prefix
// status is monotone in length).
TopPriorityVerdict smallest_top_priority_set(const Problem& p, StudentIdx i);

// Guaranteed outcomes for a student: her smallest top-priority set, or her
// acceptable schools plus the outside option when she has none.
std::vector<int> guaranteed_outcomes(const Problem& p, StudentIdx i);

struct TpsViolation {
  StudentIdx student;
  std::vector<SchoolIdx> set;  // smallest top-priority set the seat misses
};

std::vector<TpsViolation> tps_violations(const Problem& p, const Assignment& a);
bool respects_top_priority_sets(const Problem& p, const Assignment& a);

struct Complaint {
  enum class Kind { kUnacceptableSeat, kWastedSeat, kTopPriorityViolation };
  StudentIdx student;
  Kind kind;
  SchoolIdx school = -1;         // witness for kWastedSeat
  std::vector<SchoolIdx> set;    // witness for kTopPriorityViolation
};

struct AuditReport {
  bool incontestable = false;
  std::vector<Complaint> complaints;  // sorted by student, then kind
};

// An assignment passes iff it is individually rational, non-wasteful, and
// seats every student holding a top-priority set inside that set. A student
// left to the outside option despite holding a top-priority set counts as a
// violation.
AuditReport incontestability_verdict(const Problem& p, const Assignment& a);

// For every school s in the set and every occupant x of s, all students above
// x at s are assigned inside the set.
bool is_comprehensive(const Problem& p, const Assignment& a,
                      const std::vector<SchoolIdx>& schools);

// Fills every listed school to capacity with students above i, comprehensive
// for the set; everyone else keeps the outside option. First hit in a
// deterministic exhaustive scan. Throws kIsHighPrioritySet when no saturating
// assignment exists.
Assignment construct_saturating_comprehensive(const Problem& p, StudentIdx i,
                                              const std::vector<SchoolIdx>& schools);

}  // namespace incontest

#endif  // INCONTEST_PRIORITY_SETS_HPP_
