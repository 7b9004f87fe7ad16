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

#ifndef INCONTEST_MECHANISMS_HPP_
#define INCONTEST_MECHANISMS_HPP_

#include <vector>

#include "incontest/model.hpp"

namespace incontest {

// Diagnostic record of one mechanism event. kPlace events are the canonical
// subset: replaying them in order (outside option by default) reproduces the
// outcome. All other kinds are informational.
struct TraceEvent {
  enum class Kind {
    kPropose,  // student applies to school
    kReject,   // school turns student away
    kHold,     // tentative admission / seat pre-assignment
    kClinch,   // guaranteed admission taken
    kCycle,    // student traded into school via a pointing cycle
    kSettle,   // seat made permanent when its school left the market
    kPlace,    // final placement (school index, or kSelf for outside option)
    kRetire,   // student leaves with every listed school closed to her
  };
  int round;
  Kind kind;
  StudentIdx student;
  int school;  // school index, or kSelf where it does not apply
};

struct MechanismRun {
  MechanismSpec spec;
  Assignment outcome;
  std::vector<TraceEvent> trace;
};

// Student-proposing deferred acceptance.
Assignment run_sosm(const Problem& p);
// Immediate acceptance, rounds by choice position.
Assignment run_boston(const Problem& p);
// Top trading cycles adapted to school choice.
Assignment run_ttc(const Problem& p);
// Iterated deferred acceptance; each round permanently settles the students
// seated at schools nobody else wants and removes those schools.
Assignment run_seadam(const Problem& p);
// Clinch and trade: iterated clinching against shrinking seat counts, then
// one cycle-removal pass per round.
Assignment run_ct(const Problem& p);
// First clinch and trade: clinching thresholds stay at the round-start seat
// count, then one cycle-removal pass per round.
Assignment run_fct(const Problem& p);
// Equitable top trading cycles: seats pre-assigned to high-priority students,
// pairs of (holder, seat) trade along pointing cycles.
Assignment run_ettc(const Problem& p);
// Application rejection: deferred acceptance on successive preference
// segments of length `period`; placements become permanent between rounds.
// period = 1 coincides with Boston, period >= longest list with SOSM.
Assignment run_ar(const Problem& p, int period);

// Dispatch with trace capture. Enforces spec.list_cap on submitted lists
// (throws kListCapExceeded; lists are never truncated silently).
MechanismRun run_mechanism(const MechanismSpec& spec, const Problem& p);

// Outcome-only dispatch for enumeration hot paths.
Assignment run_spec(const MechanismSpec& spec, const Problem& p);

// Replays the kPlace events of a trace.
Assignment replay_trace(const Problem& p, const std::vector<TraceEvent>& trace);

// Pairs (i, s) where s is i's first acceptable school and i holds the top
// priority at s. Ordered by student.
std::vector<std::pair<StudentIdx, SchoolIdx>> top_top_pairs(const Problem& p);

}  // namespace incontest

#endif  // INCONTEST_MECHANISMS_HPP_
