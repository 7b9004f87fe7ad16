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

#ifndef INCONTEST_ORACLE_HPP_
#define INCONTEST_ORACLE_HPP_

#include <functional>
#include <map>
#include <vector>

#include "incontest/mechanisms.hpp"
#include "incontest/model.hpp"
#include "incontest/properties.hpp"

namespace incontest {

// Position of outcome v in a bare preference list: listed schools by
// position, the outside option after them, unlisted schools one rank below
// that (tied).
int outcome_rank_in(const std::vector<SchoolIdx>& pref, int v);

// All injective school sequences of length 0..cap (cap = 0 means no bound),
// ordered by length, then lexicographically by school index.
struct StrategySpace {
  int num_schools = 0;
  int cap = 0;  // effective cap after clamping to num_schools
  std::vector<std::vector<SchoolIdx>> strategies;
};

StrategySpace make_strategy_space(int num_schools, int list_cap);

// Streams preference profiles: the listed students sweep the strategy space
// in odometer order (last listed student fastest), everyone else keeps the
// prefs they have in `base`. Throws kBudgetExceeded up front when the profile
// count passes `budget`.
class ProfileEnumerator {
 public:
  ProfileEnumerator(const Problem& base, std::vector<StudentIdx> free_students,
                    const StrategySpace& space, long long budget);

  // Next profile, or nullptr when exhausted. The pointee stays valid until
  // the following call.
  const Problem* next();

  long long total() const { return total_; }

 private:
  Problem cur_;
  std::vector<StudentIdx> free_;
  const StrategySpace space_;
  std::vector<std::size_t> idx_;
  long long total_ = 0;
  bool started_ = false;
  bool done_ = false;
};

// Outcomes a student can reach by some counterpart profile, holding her own
// report fixed. Witness profiles replay to their outcome.
struct AttainableReport {
  std::vector<int> outcomes;  // sorted, kSelf first
  std::map<int, std::vector<std::vector<SchoolIdx>>> witnesses;  // outcome -> full prefs
};

AttainableReport attainable_set(const MechanismSpec& spec, const Problem& frame,
                                StudentIdx i, const std::vector<SchoolIdx>& pref,
                                long long budget);

// True iff the attainable set equals the student's guaranteed outcome set
// (smallest top-priority set, or acceptable schools plus the outside option).
bool attainable_matches_guarantee(const MechanismSpec& spec, const Problem& frame,
                                  StudentIdx i, const std::vector<SchoolIdx>& pref,
                                  long long budget);

// Definitional audit of one student's seat: she has a complaint iff no
// completion of the counterpart preferences admits a stable assignment that
// gives her the same seat and reproduces every school's seat count. Pure
// search: candidate assignments times counterpart completions.
bool definitional_complaint(const Problem& frame, const ExPostInfo& info,
                            long long budget);

// All capacity-feasible assignments (any student to any school or the outside
// option). Exhaustive; throws kInstanceTooLarge beyond the limits.
std::vector<Assignment> enumerate_feasible(const Problem& p, const EnumLimits& limits = {});

// All stable assignments.
std::vector<Assignment> enumerate_stable(const Problem& p, const EnumLimits& limits = {});

// All strict Pareto improvements over `base`: every student weakly better,
// at least one strictly better.
std::vector<Assignment> pareto_improvements(const Problem& p, const Assignment& base,
                                            const EnumLimits& limits = {});

// Full mechanism runs over every preference profile of the corpus frame, cap
// taken from spec.list_cap. Calls `fn` with each profile and its outcome;
// stops early when fn returns false. Returns the number of profiles visited.
long long for_each_profile(const MechanismSpec& spec, const Problem& frame,
                           long long budget,
                           const std::function<bool(const Problem&, const Assignment&)>& fn);

// Counterpart profile under which every mechanism that passes the
// incontestability audit and respects top-top reductions must keep student i
// out of the listed schools: fill the schools with higher-priority students
// via a comprehensive saturating assignment, trade seats along restricted
// pointing cycles, then let the seated students submit singletons and
// everyone else submit nothing. Throws kIsHighPrioritySet when the listed
// schools are out of reach for such a construction.
Problem adversarial_profile(const Problem& frame, StudentIdx i,
                            const std::vector<SchoolIdx>& pref_i,
                            const std::vector<SchoolIdx>& schools);

struct TopTopViolation {
  int problem_index;
  StudentIdx student;   // removed student (original index)
  SchoolIdx school;     // her school in the pair
  std::string mismatched;  // student whose seat changed in the reduced run
};

// For each corpus problem and each mutually-top pair the mechanism honours,
// re-runs the mechanism on the reduced problem and reports any other student
// whose seat differs.
std::vector<TopTopViolation> audit_top_top_consistency(const MechanismSpec& spec,
                                                       const std::vector<Problem>& corpus);

// Worst outcome (by the true list) the submitted report can yield across all
// counterpart profiles. spec.list_cap bounds both the submitted report and
// the counterpart space.
int maxmin_worst(const MechanismSpec& spec, const Problem& frame, StudentIdx i,
                 const std::vector<SchoolIdx>& submitted,
                 const std::vector<SchoolIdx>& truth, long long budget);

// True iff the truthful report (truncated to the cap when bounded) attains
// the best worst-case outcome over the whole capped strategy space.
bool check_maxmin_optimal(const MechanismSpec& spec, const Problem& frame, StudentIdx i,
                          const std::vector<SchoolIdx>& truth, long long budget);

struct SafeStrategyReport {
  bool exists = false;
  std::vector<SchoolIdx> witness;  // a guaranteeing report when exists
};

// Characterization path: a report of length <= k guarantees a school seat
// iff some school set of size <= k cannot be filled past the student.
// k = 0 means no bound.
SafeStrategyReport has_safe_strategy(const Problem& frame, StudentIdx i, int k);

// Brute-force path over the capped strategy spaces (cap from spec.list_cap).
SafeStrategyReport has_safe_strategy_brute(const MechanismSpec& spec, const Problem& frame,
                                           StudentIdx i, long long budget);

struct DominantStrategyReport {
  bool exists = false;
  std::vector<SchoolIdx> strategy;  // canonical dominant report when exists
};

// Characterization path: a dominant report exists under cap k iff the
// acceptable list fits the cap, or some acceptable prefix of length <= k
// cannot be filled past the student. The canonical report is the k-prefix of
// the true list.
DominantStrategyReport has_dominant_strategy(const Problem& frame, StudentIdx i,
                                             const std::vector<SchoolIdx>& truth, int k);

// Brute-force path: a report dominant against every alternative, pointwise
// over all counterpart profiles, outcomes ranked by the true list.
DominantStrategyReport has_dominant_strategy_brute(const MechanismSpec& spec,
                                                   const Problem& frame, StudentIdx i,
                                                   const std::vector<SchoolIdx>& truth,
                                                   long long budget);

// Default enumeration budget, overridable via the INCONTEST_BUDGET
// environment variable.
long long default_budget();

}  // namespace incontest

#endif  // INCONTEST_ORACLE_HPP_
