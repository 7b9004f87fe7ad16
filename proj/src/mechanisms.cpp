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

#include "incontest/mechanisms.hpp"

#include <algorithm>
#include <queue>

namespace incontest {

namespace {

using Trace = std::vector<TraceEvent>;

void emit(Trace* tr, int round, TraceEvent::Kind kind, int student, int school) {
  if (tr != nullptr) tr->push_back({round, kind, student, school});
}

// Deferred acceptance over a preference window [lo_i, hi_i) per student.
// Students outside `active` or with an empty window do not participate.
// Returns tentative seats (kSelf for the rest); does not emit kPlace.
std::vector<int> da_window(const Problem& p, const std::vector<char>& active,
                           const std::vector<int>& cap, const std::vector<int>& lo,
                           const std::vector<int>& hi, int round, Trace* tr) {
  const int n = p.num_students();
  const int m = p.num_schools();
  std::vector<int> ptr = lo;
  std::vector<std::vector<int>> held(m);
  std::queue<int> q;
  for (int i = 0; i < n; ++i)
    if (active[i] && lo[i] < hi[i]) q.push(i);

  while (!q.empty()) {
    int i = q.front();
    q.pop();
    while (true) {
      if (ptr[i] >= hi[i]) break;  // window exhausted, i stays out this round
      const int s = p.prefs[i][ptr[i]];
      emit(tr, round, TraceEvent::Kind::kPropose, i, s);
      if (cap[s] == 0) {
        emit(tr, round, TraceEvent::Kind::kReject, i, s);
        ++ptr[i];
        continue;
      }
      held[s].push_back(i);
      if (static_cast<int>(held[s].size()) <= cap[s]) {
        emit(tr, round, TraceEvent::Kind::kHold, i, s);
        break;
      }
      // Evict the worst-priority holder.
      int worst = 0;
      for (int t = 1; t < static_cast<int>(held[s].size()); ++t)
        if (p.rank[s][held[s][t]] > p.rank[s][held[s][worst]]) worst = t;
      const int w = held[s][worst];
      held[s].erase(held[s].begin() + worst);
      emit(tr, round, TraceEvent::Kind::kReject, w, s);
      ++ptr[w];
      if (w == i) continue;
      emit(tr, round, TraceEvent::Kind::kHold, i, s);
      q.push(w);
      break;
    }
  }

  std::vector<int> seat(n, kSelf);
  for (int s = 0; s < m; ++s)
    for (int i : held[s]) seat[i] = s;
  return seat;
}

Assignment finalize(const Problem& p, std::vector<int> seat, int round, Trace* tr) {
  for (int i = 0; i < p.num_students(); ++i)
    emit(tr, round, TraceEvent::Kind::kPlace, i, seat[i]);
  return make_assignment(p, std::move(seat));
}

Assignment sosm_impl(const Problem& p, Trace* tr) {
  std::vector<char> active(p.num_students(), 1);
  std::vector<int> lo(p.num_students(), 0), hi(p.num_students());
  for (int i = 0; i < p.num_students(); ++i) hi[i] = static_cast<int>(p.prefs[i].size());
  auto seat = da_window(p, active, p.capacity, lo, hi, 0, tr);
  return finalize(p, std::move(seat), 0, tr);
}

Assignment ar_impl(const Problem& p, int period, Trace* tr) {
  if (period < 1) throw Error(Err::kInvalidPeriod, "ar period must be >= 1");
  const int n = p.num_students();
  std::vector<int> seat(n, kSelf);
  std::vector<char> unassigned(n, 1);
  std::vector<int> live = p.capacity;
  int max_len = 0;
  for (int i = 0; i < n; ++i) max_len = std::max(max_len, static_cast<int>(p.prefs[i].size()));

  for (int t = 0; t * period < max_len; ++t) {
    std::vector<char> active(n, 0);
    std::vector<int> lo(n, 0), hi(n, 0);
    bool any = false;
    for (int i = 0; i < n; ++i) {
      if (!unassigned[i]) continue;
      const int len = static_cast<int>(p.prefs[i].size());
      lo[i] = t * period;
      hi[i] = std::min(len, (t + 1) * period);
      if (lo[i] < hi[i]) {
        active[i] = 1;
        any = true;
      }
    }
    if (!any) break;
    auto round_seat = da_window(p, active, live, lo, hi, t, tr);
    for (int i = 0; i < n; ++i)
      if (round_seat[i] != kSelf) {
        seat[i] = round_seat[i];
        unassigned[i] = 0;
        --live[round_seat[i]];
        emit(tr, t, TraceEvent::Kind::kPlace, i, seat[i]);
      }
  }
  for (int i = 0; i < n; ++i)
    if (unassigned[i]) emit(tr, max_len, TraceEvent::Kind::kPlace, i, kSelf);
  return make_assignment(p, std::move(seat));
}

Assignment boston_impl(const Problem& p, Trace* tr) {
  const int n = p.num_students();
  const int m = p.num_schools();
  std::vector<int> seat(n, kSelf);
  std::vector<char> unassigned(n, 1);
  std::vector<int> live = p.capacity;
  int max_len = 0;
  for (int i = 0; i < n; ++i) max_len = std::max(max_len, static_cast<int>(p.prefs[i].size()));

  for (int t = 0; t < max_len; ++t) {
    std::vector<std::vector<int>> apps(m);
    for (int i = 0; i < n; ++i)
      if (unassigned[i] && t < static_cast<int>(p.prefs[i].size())) {
        apps[p.prefs[i][t]].push_back(i);
        emit(tr, t, TraceEvent::Kind::kPropose, i, p.prefs[i][t]);
      }
    for (int s = 0; s < m; ++s) {
      auto& round_apps = apps[s];
      std::sort(round_apps.begin(), round_apps.end(),
                [&](int a, int b) { return p.rank[s][a] < p.rank[s][b]; });
      for (int i : round_apps) {
        if (live[s] > 0) {
          --live[s];
          seat[i] = s;
          unassigned[i] = 0;
          emit(tr, t, TraceEvent::Kind::kPlace, i, s);
        } else {
          emit(tr, t, TraceEvent::Kind::kReject, i, s);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (unassigned[i]) emit(tr, max_len, TraceEvent::Kind::kPlace, i, kSelf);
  return make_assignment(p, std::move(seat));
}

// Shared by the trading mechanisms: first listed school with live seats,
// or -1 when the whole list is closed.
int top_live_school(const Problem& p, int i, const std::vector<int>& live) {
  for (int s : p.prefs[i])
    if (live[s] > 0) return s;
  return -1;
}

int top_active_student(const Problem& p, int s, const std::vector<char>& active) {
  for (int i : p.priority[s])
    if (active[i]) return i;
  return -1;
}

// Retires every active student whose list has no live school left.
void retire_exhausted(const Problem& p, std::vector<char>& active,
                      const std::vector<int>& live, int round, Trace* tr) {
  for (int i = 0; i < p.num_students(); ++i)
    if (active[i] && top_live_school(p, i, live) == -1) {
      active[i] = 0;
      emit(tr, round, TraceEvent::Kind::kRetire, i, kSelf);
      emit(tr, round, TraceEvent::Kind::kPlace, i, kSelf);
    }
}

bool any_active(const std::vector<char>& active) {
  return std::any_of(active.begin(), active.end(), [](char c) { return c != 0; });
}

// One cycle-removal pass: point, collect every cycle of the static graph,
// assign each cycle's students to the schools they point to. Returns the
// number of students placed.
int cycle_pass(const Problem& p, std::vector<char>& active, std::vector<int>& live,
               std::vector<int>& seat, int round, Trace* tr) {
  const int n = p.num_students();
  std::vector<int> stu_pt(n, -1);
  for (int i = 0; i < n; ++i)
    if (active[i]) stu_pt[i] = top_live_school(p, i, live);

  // Walk the functional graph student -> pointed school -> its best active
  // student; every maximal walk falls into a cycle.
  std::vector<int> color(n, 0);  // 0 unvisited, 1 on current walk, 2 done
  std::vector<int> placed;
  for (int start = 0; start < n; ++start) {
    if (!active[start] || color[start] != 0) continue;
    std::vector<int> path;
    int cur = start;
    while (cur != -1 && color[cur] == 0) {
      color[cur] = 1;
      path.push_back(cur);
      const int s = stu_pt[cur];
      cur = s == -1 ? -1 : top_active_student(p, s, active);
    }
    if (cur != -1 && color[cur] == 1) {
      // The tail of `path` from cur onward is a cycle.
      const auto it = std::find(path.begin(), path.end(), cur);
      for (auto c = it; c != path.end(); ++c) placed.push_back(*c);
    }
    for (int i : path) color[i] = 2;
  }
  for (int i : placed) {
    const int s = stu_pt[i];
    seat[i] = s;
    --live[s];
    active[i] = 0;
    emit(tr, round, TraceEvent::Kind::kCycle, i, s);
    emit(tr, round, TraceEvent::Kind::kPlace, i, s);
  }
  return static_cast<int>(placed.size());
}

Assignment ttc_impl(const Problem& p, Trace* tr) {
  const int n = p.num_students();
  std::vector<int> seat(n, kSelf);
  std::vector<int> live = p.capacity;
  std::vector<char> active(n, 1);
  int round = 0;
  while (true) {
    retire_exhausted(p, active, live, round, tr);
    if (!any_active(active)) break;
    if (cycle_pass(p, active, live, seat, round, tr) == 0) break;  // defensive
    ++round;
  }
  return make_assignment(p, std::move(seat));
}

// Iterated clinching: seats clinch one at a time, and each clinch shrinks
// both the pool and the cutoff, which can unlock further clinches.
void clinch_sweeps(const Problem& p, std::vector<char>& active, std::vector<int>& live,
                   std::vector<int>& seat, int round, Trace* tr) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < p.num_students(); ++i) {
      if (!active[i]) continue;
      const int s = top_live_school(p, i, live);
      if (s == -1) continue;  // retired at the next round boundary
      int pos = 0;
      for (int j : p.priority[s]) {
        if (j == i) break;
        if (active[j]) ++pos;
      }
      if (pos < live[s]) {
        seat[i] = s;
        --live[s];
        active[i] = 0;
        progress = true;
        emit(tr, round, TraceEvent::Kind::kClinch, i, s);
        emit(tr, round, TraceEvent::Kind::kPlace, i, s);
      }
    }
  }
}

// One simultaneous clinch pass: pointers, cutoffs, and priority positions all
// read the round-start state, so at most the round-start seat count clinches
// at any school.
void clinch_pass(const Problem& p, std::vector<char>& active, std::vector<int>& live,
                 std::vector<int>& seat, int round, Trace* tr) {
  const std::vector<char> pool = active;
  const std::vector<int> start = live;
  for (int i = 0; i < p.num_students(); ++i) {
    if (!pool[i]) continue;
    const int s = top_live_school(p, i, start);
    if (s == -1) continue;
    int pos = 0;
    for (int j : p.priority[s]) {
      if (j == i) break;
      if (pool[j]) ++pos;
    }
    if (pos < start[s]) {
      seat[i] = s;
      --live[s];
      active[i] = 0;
      emit(tr, round, TraceEvent::Kind::kClinch, i, s);
      emit(tr, round, TraceEvent::Kind::kPlace, i, s);
    }
  }
}

Assignment ct_impl(const Problem& p, bool first_clinch_only, Trace* tr) {
  const int n = p.num_students();
  std::vector<int> seat(n, kSelf);
  std::vector<int> live = p.capacity;
  std::vector<char> active(n, 1);
  int round = 0;
  while (true) {
    retire_exhausted(p, active, live, round, tr);
    if (!any_active(active)) break;
    int placed_before = 0;
    for (char c : active) placed_before += c;
    if (first_clinch_only)
      clinch_pass(p, active, live, seat, round, tr);
    else
      clinch_sweeps(p, active, live, seat, round, tr);
    retire_exhausted(p, active, live, round, tr);
    int placed = 0;
    if (any_active(active)) placed = cycle_pass(p, active, live, seat, round, tr);
    int placed_after = 0;
    for (char c : active) placed_after += c;
    if (placed == 0 && placed_after == placed_before) break;  // defensive
    ++round;
  }
  return make_assignment(p, std::move(seat));
}

Assignment seadam_impl(const Problem& p, Trace* tr) {
  const int n = p.num_students();
  std::vector<int> seat(n, kSelf);
  Problem cur = p;
  std::vector<int> stu_orig(n), sch_orig(p.num_schools());
  for (int i = 0; i < n; ++i) stu_orig[i] = i;
  for (int s = 0; s < p.num_schools(); ++s) sch_orig[s] = s;

  int round = 0;
  while (cur.num_students() > 0) {
    Assignment da = sosm_impl(cur, nullptr);

    std::vector<char> demanded(cur.num_schools(), 0);
    for (int i = 0; i < cur.num_students(); ++i)
      for (int s : cur.prefs[i]) {
        if (!cur.prefers(i, s, da.seat[i])) break;
        demanded[s] = 1;
      }

    std::vector<bool> drop_school(cur.num_schools(), false);
    std::vector<bool> drop_student(cur.num_students(), false);
    bool any_undemanded = false;
    for (int s = 0; s < cur.num_schools(); ++s)
      if (!demanded[s]) {
        any_undemanded = true;
        drop_school[s] = true;
      }

    if (any_undemanded) {
      // Settle the occupants of the departing schools; everyone else re-runs.
      for (int i = 0; i < cur.num_students(); ++i)
        if (da.seat[i] != kSelf && drop_school[da.seat[i]]) {
          drop_student[i] = true;
          seat[stu_orig[i]] = sch_orig[da.seat[i]];
          emit(tr, round, TraceEvent::Kind::kSettle, stu_orig[i], sch_orig[da.seat[i]]);
          emit(tr, round, TraceEvent::Kind::kPlace, stu_orig[i], sch_orig[da.seat[i]]);
        }
    } else {
      bool any_unmatched = false;
      for (int i = 0; i < cur.num_students(); ++i)
        if (da.seat[i] == kSelf) {
          any_unmatched = true;
          drop_student[i] = true;
          emit(tr, round, TraceEvent::Kind::kRetire, stu_orig[i], kSelf);
          emit(tr, round, TraceEvent::Kind::kPlace, stu_orig[i], kSelf);
        }
      if (!any_unmatched) {
        // Everyone matched and every school still wanted: finalize here.
        for (int i = 0; i < cur.num_students(); ++i) {
          seat[stu_orig[i]] = sch_orig[da.seat[i]];
          emit(tr, round, TraceEvent::Kind::kPlace, stu_orig[i], sch_orig[da.seat[i]]);
        }
        break;
      }
    }

    std::vector<int> new_stu_orig, new_sch_orig;
    for (int i = 0; i < cur.num_students(); ++i)
      if (!drop_student[i]) new_stu_orig.push_back(stu_orig[i]);
    for (int s = 0; s < cur.num_schools(); ++s)
      if (!drop_school[s]) new_sch_orig.push_back(sch_orig[s]);
    cur = restrict_problem(cur, drop_student, drop_school, cur.capacity);
    stu_orig = std::move(new_stu_orig);
    sch_orig = std::move(new_sch_orig);
    ++round;
  }
  return make_assignment(p, std::move(seat));
}

// ---- equitable top trading cycles ------------------------------------------

struct EttcSeat {
  int school;
  int holder = -1;       // student index, -1 when free
  bool consumed = false;
};

Assignment ettc_impl(const Problem& p, Trace* tr) {
  const int n = p.num_students();
  const int m = p.num_schools();
  std::vector<EttcSeat> seats;
  std::vector<std::vector<int>> school_seats(m);
  for (int s = 0; s < m; ++s)
    for (int c = 0; c < p.capacity[s]; ++c) {
      school_seats[s].push_back(static_cast<int>(seats.size()));
      seats.push_back({s});
    }
  std::vector<int> consumed_count(m, 0);
  std::vector<int> seat_of(n, kSelf);
  std::vector<char> active(n, 1);

  auto in_play = [&](int s) { return consumed_count[s] < p.capacity[s]; };
  auto first_open_school = [&](int i) {
    for (int s : p.prefs[i])
      if (in_play(s)) return s;
    return -1;
  };

  int round = 0;
  while (true) {
    for (int i = 0; i < n; ++i)
      if (active[i] && first_open_school(i) == -1) {
        active[i] = 0;
        // Seats she still held go back to the pool.
        for (auto& seat_rec : seats)
          if (!seat_rec.consumed && seat_rec.holder == i) seat_rec.holder = -1;
        emit(tr, round, TraceEvent::Kind::kRetire, i, kSelf);
        emit(tr, round, TraceEvent::Kind::kPlace, i, kSelf);
      }
    if (!any_active(active)) break;

    // Pre-assign free seats: each school hands them to its best active
    // students, one seat per student per school.
    for (int s = 0; s < m; ++s) {
      std::vector<char> holds_here(n, 0);
      for (int sid : school_seats[s])
        if (!seats[sid].consumed && seats[sid].holder != -1) holds_here[seats[sid].holder] = 1;
      auto next_taker = p.priority[s].begin();
      for (int sid : school_seats[s]) {
        if (seats[sid].consumed || seats[sid].holder != -1) continue;
        while (next_taker != p.priority[s].end() &&
               (!active[*next_taker] || holds_here[*next_taker]))
          ++next_taker;
        if (next_taker == p.priority[s].end()) break;
        seats[sid].holder = *next_taker;
        holds_here[*next_taker] = 1;
        emit(tr, round, TraceEvent::Kind::kHold, *next_taker, s);
      }
    }

    // Pointing: the pairs of one student target distinct held seats of her
    // favourite open school, best holders (by priority at the pair's own
    // school) first.
    std::vector<std::vector<int>> held_by(n);
    for (int sid = 0; sid < static_cast<int>(seats.size()); ++sid)
      if (!seats[sid].consumed && seats[sid].holder != -1)
        held_by[seats[sid].holder].push_back(sid);

    std::vector<int> point(seats.size(), -1);
    for (int i = 0; i < n; ++i) {
      if (held_by[i].empty()) continue;
      const int target = first_open_school(i);
      std::vector<int> target_seats;
      for (int sid : school_seats[target])
        if (!seats[sid].consumed && seats[sid].holder != -1) target_seats.push_back(sid);
      std::vector<char> taken(target_seats.size(), 0);
      for (int sid : held_by[i]) {
        const int home = seats[sid].school;
        int best = -1;
        for (int t = 0; t < static_cast<int>(target_seats.size()); ++t) {
          if (taken[t]) continue;
          if (best == -1 || p.rank[home][seats[target_seats[t]].holder] <
                                p.rank[home][seats[target_seats[best]].holder])
            best = t;
        }
        if (best == -1) {
          // More pairs than targets: fall back to the overall best holder.
          best = 0;
          for (int t = 1; t < static_cast<int>(target_seats.size()); ++t)
            if (p.rank[home][seats[target_seats[t]].holder] <
                p.rank[home][seats[target_seats[best]].holder])
              best = t;
        } else {
          taken[best] = 1;
        }
        point[sid] = target_seats[best];
      }
    }

    // Collect all cycles of the pair graph, then trade along each. A student
    // in several cycles takes one seat; the seats her other predecessors
    // would have handed over are released below.
    std::vector<int> color(seats.size(), 0);
    std::vector<std::vector<int>> cycles;
    for (int start = 0; start < static_cast<int>(seats.size()); ++start) {
      if (point[start] == -1 || color[start] != 0) continue;
      std::vector<int> path;
      int cur = start;
      while (cur != -1 && color[cur] == 0) {
        color[cur] = 1;
        path.push_back(cur);
        cur = point[cur];
      }
      if (cur != -1 && color[cur] == 1) {
        auto it = std::find(path.begin(), path.end(), cur);
        cycles.emplace_back(it, path.end());
      }
      for (int sid : path) color[sid] = 2;
    }

    int placed = 0;
    for (const auto& cycle : cycles)
      for (int sid : cycle) {
        const int i = seats[sid].holder;
        if (!active[i]) continue;  // already served by an earlier cycle
        const int succ = point[sid];
        seats[succ].consumed = true;
        ++consumed_count[seats[succ].school];
        seat_of[i] = seats[succ].school;
        active[i] = 0;
        ++placed;
        emit(tr, round, TraceEvent::Kind::kCycle, i, seats[succ].school);
        emit(tr, round, TraceEvent::Kind::kPlace, i, seats[succ].school);
      }
    // Free unconsumed seats whose holders just left.
    for (auto& seat_rec : seats)
      if (!seat_rec.consumed && seat_rec.holder != -1 && !active[seat_rec.holder])
        seat_rec.holder = -1;
    if (placed == 0) break;  // defensive
    ++round;
  }
  return make_assignment(p, std::move(seat_of));
}

Assignment dispatch(const MechanismSpec& spec, const Problem& p, Trace* tr) {
  if (spec.list_cap > 0)
    for (int i = 0; i < p.num_students(); ++i)
      if (static_cast<int>(p.prefs[i].size()) > spec.list_cap)
        throw Error(Err::kListCapExceeded,
                    "submitted list of " + p.student_names[i] + " exceeds cap " +
                        std::to_string(spec.list_cap));
  using K = MechanismSpec::Kind;
  switch (spec.kind) {
    case K::kSosm: return sosm_impl(p, tr);
    case K::kBoston: return boston_impl(p, tr);
    case K::kTtc: return ttc_impl(p, tr);
    case K::kSeadam: return seadam_impl(p, tr);
    case K::kCt: return ct_impl(p, false, tr);
    case K::kFct: return ct_impl(p, true, tr);
    case K::kEttc: return ettc_impl(p, tr);
    case K::kAr: return ar_impl(p, spec.period, tr);
  }
  throw Error(Err::kBadMechanismSpec, "unhandled mechanism kind");
}

}  // namespace

Assignment run_sosm(const Problem& p) { return sosm_impl(p, nullptr); }
Assignment run_boston(const Problem& p) { return boston_impl(p, nullptr); }
Assignment run_ttc(const Problem& p) { return ttc_impl(p, nullptr); }
Assignment run_seadam(const Problem& p) { return seadam_impl(p, nullptr); }
Assignment run_ct(const Problem& p) { return ct_impl(p, false, nullptr); }
Assignment run_fct(const Problem& p) { return ct_impl(p, true, nullptr); }
Assignment run_ettc(const Problem& p) { return ettc_impl(p, nullptr); }
Assignment run_ar(const Problem& p, int period) { return ar_impl(p, period, nullptr); }

MechanismRun run_mechanism(const MechanismSpec& spec, const Problem& p) {
  MechanismRun run;
  run.spec = spec;
  run.outcome = dispatch(spec, p, &run.trace);
  return run;
}

Assignment run_spec(const MechanismSpec& spec, const Problem& p) {
  return dispatch(spec, p, nullptr);
}

Assignment replay_trace(const Problem& p, const std::vector<TraceEvent>& trace) {
  std::vector<int> seat(p.num_students(), kSelf);
  for (const auto& ev : trace)
    if (ev.kind == TraceEvent::Kind::kPlace) seat[ev.student] = ev.school;
  return make_assignment(p, std::move(seat));
}

std::vector<std::pair<StudentIdx, SchoolIdx>> top_top_pairs(const Problem& p) {
  std::vector<std::pair<StudentIdx, SchoolIdx>> out;
  for (int i = 0; i < p.num_students(); ++i) {
    if (p.prefs[i].empty()) continue;
    const int s = p.prefs[i][0];
    if (p.priority[s][0] == i) out.emplace_back(i, s);
  }
  return out;
}

}  // namespace incontest
