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

#ifndef INCONTEST_PROPERTIES_HPP_
#define INCONTEST_PROPERTIES_HPP_

#include <tuple>
#include <vector>

#include "incontest/model.hpp"

namespace incontest {

// Every assigned student finds her seat acceptable.
bool is_individually_rational(const Problem& p, const Assignment& a);

// Pairs (i, s): student i prefers s to her outcome and s has a free seat.
// Ordered by student, then by i's preference position of s.
std::vector<std::pair<StudentIdx, SchoolIdx>> wasteful_witnesses(const Problem& p,
                                                                 const Assignment& a);
bool is_non_wasteful(const Problem& p, const Assignment& a);

// Triples (i, j, s): i prefers s to her outcome, j occupies a seat at s, and
// i has higher priority at s than j. Ordered by (i, preference position of s,
// priority position of j).
std::vector<std::tuple<StudentIdx, StudentIdx, SchoolIdx>> justified_envy_triples(
    const Problem& p, const Assignment& a);

bool is_stable(const Problem& p, const Assignment& a);

struct StabilityReport {
  bool individually_rational = false;
  std::vector<std::pair<StudentIdx, SchoolIdx>> wasteful;
  std::vector<std::tuple<StudentIdx, StudentIdx, SchoolIdx>> envy;
  bool stable() const { return individually_rational && wasteful.empty() && envy.empty(); }
};

StabilityReport stability_report(const Problem& p, const Assignment& a);

// Every student weakly prefers her `a` outcome to her `b` outcome, at least
// one strictly.
bool pareto_dominates(const Problem& p, const Assignment& a, const Assignment& b);

struct EnumLimits {
  int max_students = 6;
  int max_schools = 4;
};

// True iff no assignment Pareto dominates `a`. Exhaustive search over
// capacity-feasible assignments; throws kInstanceTooLarge beyond the limits.
bool is_efficient(const Problem& p, const Assignment& a, const EnumLimits& limits = {});

struct RhtReport {
  bool pass = false;
  // One entry per violated clause, with a school or student witness.
  struct Failure {
    int clause;  // 1: fill counts differ, 2: under-capacity school rosters differ,
                 // 3: matched student sets differ
    int witness; // school for clauses 1-2, student for clause 3
  };
  std::vector<Failure> failures;
};

// Structural comparison of a Pareto improvement `dominating` over an
// individually rational, non-wasteful `base`: per-school fill counts match,
// under-capacity schools keep identical rosters, and the matched student set
// is unchanged. Throws kPreconditionViolated if the inputs do not satisfy the
// premise.
RhtReport check_generalized_rht(const Problem& p, const Assignment& dominating,
                                const Assignment& base);

}  // namespace incontest

#endif  // INCONTEST_PROPERTIES_HPP_
