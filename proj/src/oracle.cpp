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

#include "incontest/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <cstdlib>
#include <cstring>
#include <utility>

#include "incontest/priority_sets.hpp"

namespace incontest {
namespace {

constexpr long long kSaturated = LLONG_MAX / 4;

// base^exp, clamped well below overflow.
long long sat_pow(long long base, int exp) {
  long long r = 1;
  for (int t = 0; t < exp; ++t) {
    if (base != 0 && r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

void check_budget(long long total, long long budget) {
  if (budget > 0 && total > budget) throw Error(Err::kBudgetExceeded, "profile count exceeds budget");
}

void check_limits(const Problem& p, const EnumLimits& limits) {
  if (p.num_students() > limits.max_students || p.num_schools() > limits.max_schools)
    throw Error(Err::kInstanceTooLarge, "instance exceeds enumeration limits");
}

std::vector<StudentIdx> everyone_but(const Problem& p, StudentIdx i) {
  std::vector<StudentIdx> out;
  for (int j = 0; j < p.num_students(); ++j)
    if (j != i) out.push_back(j);
  return out;
}

}  // namespace

int outcome_rank_in(const std::vector<SchoolIdx>& pref, int v) {
  const int len = static_cast<int>(pref.size());
  if (v == kSelf) return len;
  for (int t = 0; t < len; ++t)
    if (pref[t] == v) return t;
  return len + 1;
}

StrategySpace make_strategy_space(int num_schools, int list_cap) {
  StrategySpace sp;
  sp.num_schools = num_schools;
  sp.cap = (list_cap <= 0 || list_cap > num_schools) ? num_schools : list_cap;
  std::vector<SchoolIdx> cur;
  std::vector<char> used(static_cast<std::size_t>(num_schools), 0);
  auto gen = [&](auto&& self, int len) -> void {
    if (static_cast<int>(cur.size()) == len) {
      sp.strategies.push_back(cur);
      return;
    }
    for (int s = 0; s < num_schools; ++s) {
      if (used[s]) continue;
      used[s] = 1;
      cur.push_back(s);
      self(self, len);
      cur.pop_back();
      used[s] = 0;
    }
  };
  for (int len = 0; len <= sp.cap; ++len) gen(gen, len);
  return sp;
}

ProfileEnumerator::ProfileEnumerator(const Problem& base, std::vector<StudentIdx> free_students,
                                     const StrategySpace& space, long long budget)
    : cur_(base), free_(std::move(free_students)), space_(space) {
  total_ = sat_pow(static_cast<long long>(space_.strategies.size()),
                   static_cast<int>(free_.size()));
  check_budget(total_, budget);
  idx_.assign(free_.size(), 0);
}

const Problem* ProfileEnumerator::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    for (StudentIdx j : free_) replace_pref(cur_, j, space_.strategies[0]);
    return &cur_;
  }
  int pos = static_cast<int>(free_.size()) - 1;
  while (pos >= 0) {
    if (++idx_[pos] < space_.strategies.size()) {
      replace_pref(cur_, free_[pos], space_.strategies[idx_[pos]]);
      for (std::size_t t = pos + 1; t < free_.size(); ++t) {
        idx_[t] = 0;
        replace_pref(cur_, free_[t], space_.strategies[0]);
      }
      return &cur_;
    }
    idx_[pos] = 0;
    --pos;
  }
  done_ = true;
  return nullptr;
}

AttainableReport attainable_set(const MechanismSpec& spec, const Problem& frame,
                                StudentIdx i, const std::vector<SchoolIdx>& pref,
                                long long budget) {
  if (i < 0 || i >= frame.num_students()) throw Error(Err::kUnknownId, "student index out of range");
  Problem base = with_pref(frame, i, pref);
  StrategySpace space = make_strategy_space(frame.num_schools(), spec.list_cap);
  ProfileEnumerator en(base, everyone_but(frame, i), space, budget);
  AttainableReport rep;
  while (const Problem* q = en.next()) {
    const int v = run_spec(spec, *q).seat[i];
    if (rep.witnesses.find(v) == rep.witnesses.end()) {
      rep.witnesses.emplace(v, q->prefs);
      rep.outcomes.push_back(v);
    }
  }
  std::sort(rep.outcomes.begin(), rep.outcomes.end());
  return rep;
}

bool attainable_matches_guarantee(const MechanismSpec& spec, const Problem& frame,
                                  StudentIdx i, const std::vector<SchoolIdx>& pref,
                                  long long budget) {
  AttainableReport rep = attainable_set(spec, frame, i, pref, budget);
  std::vector<int> want = guaranteed_outcomes(with_pref(frame, i, pref), i);
  return rep.outcomes == want;
}

bool definitional_complaint(const Problem& frame, const ExPostInfo& info,
                            long long budget) {
  const int n = frame.num_students();
  const int m = frame.num_schools();
  const StudentIdx i = info.student;
  if (i < 0 || i >= n) throw Error(Err::kUnknownId, "student index out of range");
  if (static_cast<int>(info.fill.size()) != m)
    throw Error(Err::kInconsistentAssignment, "fill vector length mismatch");
  if (info.own_seat != kSelf && (info.own_seat < 0 || info.own_seat >= m))
    throw Error(Err::kUnknownId, "seat out of range");
  std::vector<int> need(info.fill);
  for (int s = 0; s < m; ++s)
    if (need[s] < 0 || need[s] > frame.capacity[s])
      throw Error(Err::kInconsistentAssignment, "fill outside capacity");
  if (info.own_seat != kSelf) {
    if (need[info.own_seat] == 0)
      throw Error(Err::kInconsistentAssignment, "own seat not counted in fill");
    --need[info.own_seat];
  }

  // Candidate seat vectors for the other students matching the seat counts.
  std::vector<StudentIdx> others = everyone_but(frame, i);
  int remaining_need = 0;
  for (int s = 0; s < m; ++s) remaining_need += need[s];
  std::vector<std::vector<int>> candidates;
  std::vector<int> seats(static_cast<std::size_t>(n), kSelf);
  seats[i] = info.own_seat;
  auto dfs = [&](auto&& self, std::size_t t, int left) -> void {
    if (static_cast<int>(others.size() - t) < left) return;  // cannot fill the rest
    if (t == others.size()) {
      if (left == 0) candidates.push_back(seats);
      return;
    }
    const StudentIdx j = others[t];
    for (int s = 0; s < m; ++s) {
      if (need[s] == 0) continue;
      --need[s];
      seats[j] = s;
      self(self, t + 1, left - 1);
      seats[j] = kSelf;
      ++need[s];
    }
    self(self, t + 1, left);
  };
  dfs(dfs, 0, remaining_need);
  if (candidates.empty()) return true;

  Problem base = with_pref(frame, i, info.pref);
  StrategySpace space = make_strategy_space(m, 0);
  ProfileEnumerator en(base, others, space, budget);
  while (const Problem* q = en.next()) {
    for (const std::vector<int>& cand : candidates) {
      Assignment a;
      a.seat = cand;
      if (is_stable(*q, a)) return false;
    }
  }
  return true;
}

std::vector<Assignment> enumerate_feasible(const Problem& p, const EnumLimits& limits) {
  check_limits(p, limits);
  const int n = p.num_students();
  const int m = p.num_schools();
  std::vector<Assignment> out;
  std::vector<int> rem(p.capacity);
  std::vector<int> seats(static_cast<std::size_t>(n), kSelf);
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == n) {
      Assignment a;
      a.seat = seats;
      out.push_back(std::move(a));
      return;
    }
    for (int s = 0; s < m; ++s) {
      if (rem[s] == 0) continue;
      --rem[s];
      seats[i] = s;
      self(self, i + 1);
      ++rem[s];
    }
    seats[i] = kSelf;
    self(self, i + 1);
  };
  dfs(dfs, 0);
  return out;
}

std::vector<Assignment> enumerate_stable(const Problem& p, const EnumLimits& limits) {
  check_limits(p, limits);
  const int n = p.num_students();
  std::vector<Assignment> out;
  std::vector<int> rem(p.capacity);
  std::vector<int> seats(static_cast<std::size_t>(n), kSelf);
  // Stable assignments leave nobody at an unacceptable school, so each
  // student ranges over her own list plus the outside option.
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == n) {
      Assignment a;
      a.seat = seats;
      if (is_stable(p, a)) out.push_back(std::move(a));
      return;
    }
    for (SchoolIdx s : p.prefs[i]) {
      if (rem[s] == 0) continue;
      --rem[s];
      seats[i] = s;
      self(self, i + 1);
      ++rem[s];
    }
    seats[i] = kSelf;
    self(self, i + 1);
  };
  dfs(dfs, 0);
  return out;
}

std::vector<Assignment> pareto_improvements(const Problem& p, const Assignment& base,
                                            const EnumLimits& limits) {
  check_limits(p, limits);
  const int n = p.num_students();
  // Per-student weakly-better seats: schools ahead of the current seat, the
  // outside option when it beats the seat, then the seat itself.
  std::vector<std::vector<int>> options(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (SchoolIdx s : p.prefs[i]) {
      if (!p.prefers(i, s, base.seat[i])) break;
      options[i].push_back(s);
    }
    if (p.prefers(i, kSelf, base.seat[i])) options[i].push_back(kSelf);
    options[i].push_back(base.seat[i]);
  }
  std::vector<Assignment> out;
  std::vector<int> rem(p.capacity);
  std::vector<int> seats(static_cast<std::size_t>(n), kSelf);
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (seats != base.seat) {
        Assignment a;
        a.seat = seats;
        out.push_back(std::move(a));
      }
      return;
    }
    for (int v : options[i]) {
      if (v != kSelf) {
        if (rem[v] == 0) continue;
        --rem[v];
      }
      seats[i] = v;
      self(self, i + 1);
      if (v != kSelf) ++rem[v];
    }
    seats[i] = kSelf;
  };
  dfs(dfs, 0);
  return out;
}

long long for_each_profile(const MechanismSpec& spec, const Problem& frame,
                           long long budget,
                           const std::function<bool(const Problem&, const Assignment&)>& fn) {
  StrategySpace space = make_strategy_space(frame.num_schools(), spec.list_cap);
  std::vector<StudentIdx> all(static_cast<std::size_t>(frame.num_students()));
  for (int i = 0; i < frame.num_students(); ++i) all[i] = i;
  ProfileEnumerator en(frame, all, space, budget);
  long long seen = 0;
  while (const Problem* q = en.next()) {
    ++seen;
    if (!fn(*q, run_spec(spec, *q))) break;
  }
  return seen;
}

Problem adversarial_profile(const Problem& frame, StudentIdx i,
                            const std::vector<SchoolIdx>& pref_i,
                            const std::vector<SchoolIdx>& schools) {
  const int n = frame.num_students();
  const int m = frame.num_schools();
  if (i < 0 || i >= n) throw Error(Err::kUnknownId, "student index out of range");
  Assignment mu0 = construct_saturating_comprehensive(frame, i, schools);

  // Trade the saturating seats along pointing cycles: each listed school with
  // seats left points at its best not-yet-assigned student, students point at
  // their saturating seat.
  std::vector<int> live(static_cast<std::size_t>(m), 0);
  for (SchoolIdx s : schools) live[s] = frame.capacity[s];
  std::vector<int> seat1(static_cast<std::size_t>(n), kSelf);
  auto top_unassigned = [&](SchoolIdx s) -> StudentIdx {
    for (StudentIdx j : frame.priority[s])
      if (seat1[j] == kSelf) return j;
    return -1;
  };
  for (;;) {
    int open = 0;
    for (SchoolIdx s : schools) open += live[s];
    if (open == 0) break;
    bool progressed = false;
    for (SchoolIdx s0 : schools) {
      if (live[s0] == 0) continue;
      std::vector<char> onpath(static_cast<std::size_t>(m), 0);
      std::vector<std::pair<SchoolIdx, StudentIdx>> path;
      SchoolIdx cur = s0;
      for (;;) {
        onpath[cur] = 1;
        const StudentIdx j = top_unassigned(cur);
        if (j == -1) break;
        path.emplace_back(cur, j);
        const int nxt = mu0.seat[j];
        if (nxt == kSelf || live[nxt] == 0) break;
        if (onpath[nxt]) {
          std::size_t t = 0;
          while (path[t].first != nxt) ++t;
          for (; t < path.size(); ++t) {
            seat1[path[t].second] = path[t].first;
            --live[path[t].first];
          }
          progressed = true;
          break;
        }
        cur = nxt;
      }
      if (progressed) break;
    }
    if (!progressed)
      throw Error(Err::kPreconditionViolated, "pointing procedure stalled");
  }
  // The trades must land exactly on the saturating seat counts and students.
  for (SchoolIdx s : schools) {
    int cnt = 0;
    for (int j = 0; j < n; ++j) cnt += seat1[j] == s ? 1 : 0;
    if (cnt != frame.capacity[s])
      throw Error(Err::kPreconditionViolated, "pointing procedure underfilled a school");
  }
  for (int j = 0; j < n; ++j)
    if ((seat1[j] == kSelf) != (mu0.seat[j] == kSelf))
      throw Error(Err::kPreconditionViolated, "pointing procedure changed the seated set");

  std::vector<std::vector<SchoolIdx>> prefs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (j == i)
      prefs[j] = pref_i;
    else if (seat1[j] != kSelf)
      prefs[j] = {seat1[j]};
  }
  return with_prefs(frame, prefs);
}

std::vector<TopTopViolation> audit_top_top_consistency(const MechanismSpec& spec,
                                                       const std::vector<Problem>& corpus) {
  std::vector<TopTopViolation> out;
  for (int idx = 0; idx < static_cast<int>(corpus.size()); ++idx) {
    const Problem& p = corpus[idx];
    const Assignment full = run_spec(spec, p);
    for (const auto& [i, s] : top_top_pairs(p)) {
      if (full.seat[i] != s) continue;
      const Problem red = reduce_problem(p, i, s);
      const Assignment part = run_spec(spec, red);
      for (int jr = 0; jr < red.num_students(); ++jr) {
        const std::string& name = red.student_names[jr];
        const int jo = p.student_index(name);
        const int va = part.seat[jr];
        const int vb = full.seat[jo];
        const bool same =
            (va == kSelf && vb == kSelf) ||
            (va != kSelf && vb != kSelf && red.school_names[va] == p.school_names[vb]);
        if (!same) out.push_back({idx, i, s, name});
      }
    }
  }
  return out;
}

namespace {

// Worst rank the report can be pushed to; stops once `stop_at` is reached
// since more profiles cannot improve a worst case.
int worst_rank(const MechanismSpec& spec, const Problem& frame, StudentIdx i,
               const std::vector<SchoolIdx>& submitted, const std::vector<SchoolIdx>& truth,
               const StrategySpace& space, long long budget, int stop_at,
               int* representative) {
  Problem base = with_pref(frame, i, submitted);
  ProfileEnumerator en(base, everyone_but(frame, i), space, budget);
  int worst = -1;
  int seen = kSelf;
  while (const Problem* q = en.next()) {
    const int v = run_spec(spec, *q).seat[i];
    const int r = outcome_rank_in(truth, v);
    if (r > worst) {
      worst = r;
      seen = v;
      if (stop_at >= 0 && worst >= stop_at) break;
    }
  }
  if (representative != nullptr) *representative = seen;
  return worst;
}

}  // namespace

int maxmin_worst(const MechanismSpec& spec, const Problem& frame, StudentIdx i,
                 const std::vector<SchoolIdx>& submitted,
                 const std::vector<SchoolIdx>& truth, long long budget) {
  if (i < 0 || i >= frame.num_students()) throw Error(Err::kUnknownId, "student index out of range");
  StrategySpace space = make_strategy_space(frame.num_schools(), spec.list_cap);
  int rep = kSelf;
  worst_rank(spec, frame, i, submitted, truth, space, budget, -1, &rep);
  return rep;
}

bool check_maxmin_optimal(const MechanismSpec& spec, const Problem& frame, StudentIdx i,
                          const std::vector<SchoolIdx>& truth, long long budget) {
  if (i < 0 || i >= frame.num_students()) throw Error(Err::kUnknownId, "student index out of range");
  const int m = frame.num_schools();
  StrategySpace space = make_strategy_space(m, spec.list_cap);
  const long long per = sat_pow(static_cast<long long>(space.strategies.size()),
                                frame.num_students() - 1);
  check_budget(sat_pow(static_cast<long long>(space.strategies.size()), frame.num_students()),
               budget);
  const std::vector<SchoolIdx> truthful = truncated(truth, space.cap);
  const int w_truth =
      worst_rank(spec, frame, i, truthful, truth, space, per, -1, nullptr);
  for (const std::vector<SchoolIdx>& sigma : space.strategies) {
    if (sigma == truthful) continue;
    if (worst_rank(spec, frame, i, sigma, truth, space, per, w_truth, nullptr) < w_truth)
      return false;
  }
  return true;
}

SafeStrategyReport has_safe_strategy(const Problem& frame, StudentIdx i, int k) {
  const int m = frame.num_schools();
  if (i < 0 || i >= frame.num_students()) throw Error(Err::kUnknownId, "student index out of range");
  const int cap = (k <= 0 || k > m) ? m : k;
  // Smallest-first subset scan over school sets; a set that cannot be filled
  // past the student makes any report listing it a guarantee.
  std::vector<SchoolIdx> pick;
  auto dfs = [&](auto&& self, int start, int want) -> bool {
    if (static_cast<int>(pick.size()) == want)
      return is_high_priority_set(frame, i, pick);
    for (int s = start; s < m; ++s) {
      pick.push_back(s);
      if (self(self, s + 1, want)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= cap; ++size) {
    pick.clear();
    if (dfs(dfs, 0, size)) return {true, pick};
  }
  return {false, {}};
}

SafeStrategyReport has_safe_strategy_brute(const MechanismSpec& spec, const Problem& frame,
                                           StudentIdx i, long long budget) {
  if (i < 0 || i >= frame.num_students()) throw Error(Err::kUnknownId, "student index out of range");
  StrategySpace space = make_strategy_space(frame.num_schools(), spec.list_cap);
  const long long per = sat_pow(static_cast<long long>(space.strategies.size()),
                                frame.num_students() - 1);
  check_budget(sat_pow(static_cast<long long>(space.strategies.size()), frame.num_students()),
               budget);
  for (const std::vector<SchoolIdx>& sigma : space.strategies) {
    Problem base = with_pref(frame, i, sigma);
    ProfileEnumerator en(base, everyone_but(frame, i), space, per);
    bool safe = true;
    while (const Problem* q = en.next()) {
      if (run_spec(spec, *q).seat[i] == kSelf) {
        safe = false;
        break;
      }
    }
    if (safe) return {true, sigma};
  }
  return {false, {}};
}

DominantStrategyReport has_dominant_strategy(const Problem& frame, StudentIdx i,
                                             const std::vector<SchoolIdx>& truth, int k) {
  const int m = frame.num_schools();
  if (i < 0 || i >= frame.num_students()) throw Error(Err::kUnknownId, "student index out of range");
  const int cap = (k <= 0 || k > m) ? m : k;
  const std::vector<SchoolIdx> canonical = truncated(truth, cap);
  if (static_cast<int>(truth.size()) <= cap) return {true, canonical};
  // The truncation drops acceptable schools; it stays dominant only when some
  // listed prefix already locks in a seat.
  std::vector<SchoolIdx> prefix;
  for (int len = 1; len <= cap; ++len) {
    prefix.push_back(truth[len - 1]);
    if (is_high_priority_set(frame, i, prefix)) return {true, canonical};
  }
  return {false, {}};
}

DominantStrategyReport has_dominant_strategy_brute(const MechanismSpec& spec,
                                                   const Problem& frame, StudentIdx i,
                                                   const std::vector<SchoolIdx>& truth,
                                                   long long budget) {
  if (i < 0 || i >= frame.num_students()) throw Error(Err::kUnknownId, "student index out of range");
  StrategySpace space = make_strategy_space(frame.num_schools(), spec.list_cap);
  const long long n_sigma = static_cast<long long>(space.strategies.size());
  check_budget(sat_pow(n_sigma, frame.num_students()), budget);
  std::vector<StudentIdx> others = everyone_but(frame, i);
  ProfileEnumerator en(frame, others, space, kSaturated);
  // ranks[sigma][t]: outcome rank under profile t, by the true list.
  std::vector<std::vector<int>> ranks(space.strategies.size());
  while (const Problem* q = en.next()) {
    Problem work = *q;
    for (std::size_t si = 0; si < space.strategies.size(); ++si) {
      replace_pref(work, i, space.strategies[si]);
      ranks[si].push_back(outcome_rank_in(truth, run_spec(spec, work).seat[i]));
    }
  }
  const std::size_t profiles = ranks.empty() ? 0 : ranks[0].size();
  std::vector<int> best(profiles, INT_MAX);
  for (const std::vector<int>& row : ranks)
    for (std::size_t t = 0; t < profiles; ++t) best[t] = std::min(best[t], row[t]);
  for (std::size_t si = 0; si < space.strategies.size(); ++si) {
    if (ranks[si] == best) return {true, space.strategies[si]};
  }
  return {false, {}};
}

long long default_budget() {
  const char* e = std::getenv("INCONTEST_BUDGET");
  if (e == nullptr || *e == '\0') return 10'000'000;
  long long v = 0;
  const auto res = std::from_chars(e, e + std::strlen(e), v);
  if (res.ec != std::errc() || v <= 0) return 10'000'000;
  return v;
}

}  // namespace incontest
