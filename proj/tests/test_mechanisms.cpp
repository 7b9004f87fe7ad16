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

#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "incontest/generate.hpp"
#include "incontest/mechanisms.hpp"
#include "incontest/oracle.hpp"
#include "incontest/properties.hpp"

using incontest::Assignment;
using incontest::Err;
using incontest::Error;
using incontest::MechanismSpec;
using incontest::Problem;

namespace {

const std::vector<std::string> kAllSpecs = {"sosm", "boston", "ttc",  "seadam",
                                            "ct",   "fct",    "ettc", "ar:2"};

Assignment run_named(const std::string& name, const Problem& p) {
  return incontest::run_spec(incontest::parse_mechanism_spec(name), p);
}

void expect_outcome(const Problem& p, const Assignment& got,
                    const std::map<std::string, std::string>& want) {
  for (const auto& [stu, sch] : want) CHECK(test::seat_name(p, got, stu) == sch);
}

std::vector<Problem> mech_corpus() {
  std::vector<Problem> out;
  out.push_back(test::fixture("t1.json"));
  out.push_back(test::fixture("t2.json"));
  out.push_back(test::fixture("t3.json"));
  out.push_back(test::fixture("t4.json"));
  for (std::uint64_t seed = 1; seed <= 8; ++seed)
    out.push_back(incontest::gen_problem(4, 3, seed));
  for (std::uint64_t seed = 1; seed <= 4; ++seed)
    out.push_back(incontest::gen_problem_caps(4, {1, 2, 1}, seed));
  for (std::uint64_t seed = 1; seed <= 4; ++seed)
    out.push_back(incontest::gen_problem(5, 3, seed));
  for (std::uint64_t seed = 1; seed <= 2; ++seed)
    out.push_back(incontest::gen_problem_caps(6, {2, 1, 2}, seed));
  return out;
}

Problem kesten_economy() {
  return test::make_named(
      {"i1", "i2", "i3"}, {"s1", "s2"}, {1, 1},
      {{"i1", {"s2", "s1"}}, {"i2", {"s1", "s2"}}, {"i3", {"s1"}}},
      {{"s1", {"i1", "i3", "i2"}}, {"s2", {"i2", "i1", "i3"}}});
}

}  // namespace

TEST_CASE("mechanisms: fixture outcomes") {
  const auto t1 = test::fixture("t1.json");
  expect_outcome(t1, run_named("sosm", t1),
                 {{"i1", ""}, {"i2", "s1"}, {"i3", "s2"}, {"i4", "s3"}});

  const auto t2 = test::fixture("t2.json");
  for (const auto& name : {"sosm", "ttc", "seadam", "ct", "fct", "ettc", "ar:2"})
    expect_outcome(t2, run_named(name, t2), {{"i1", "s1"}, {"i2", "s2"}, {"i3", "s3"}});
  expect_outcome(t2, run_named("boston", t2), {{"i1", "s1"}, {"i2", "s3"}, {"i3", "s2"}});

  const auto t3 = test::fixture("t3.json");
  for (const auto& name : {"boston", "ar:1", "ar:2"})
    expect_outcome(t3, run_named(name, t3),
                   {{"i1", "s1"}, {"i2", "s2"}, {"i3", ""}, {"i4", "s3"}});
  for (const auto& name : {"sosm", "ar:3"})
    expect_outcome(t3, run_named(name, t3),
                   {{"i1", "s1"}, {"i2", "s2"}, {"i3", "s3"}, {"i4", ""}});

  const auto t4 = test::fixture("t4.json");
  for (const auto& name : {"sosm", "seadam"})
    expect_outcome(t4, run_named(name, t4),
                   {{"i1", ""}, {"i2", "s2"}, {"i3", "s3"}, {"i4", "s1"}});
  for (const auto& name : {"ttc", "ct", "fct"})
    expect_outcome(t4, run_named(name, t4),
                   {{"i1", "s1"}, {"i2", ""}, {"i3", "s3"}, {"i4", "s2"}});
  expect_outcome(t4, run_named("ettc", t4),
                 {{"i1", "s1"}, {"i2", "s2"}, {"i3", "s3"}, {"i4", "s3"}});
}

TEST_CASE("mechanisms: segment length one is immediate acceptance") {
  for (const auto& p : mech_corpus()) CHECK(run_named("ar:1", p) == run_named("boston", p));
}

TEST_CASE("mechanisms: a window covering every list is deferred acceptance") {
  for (const auto& p : mech_corpus()) {
    const int cover = std::max(1, p.num_schools());
    CHECK(run_named("ar:" + std::to_string(cover), p) == run_named("sosm", p));
    CHECK(run_named("ar:" + std::to_string(cover + 5), p) == run_named("sosm", p));
  }
}

TEST_CASE("mechanisms: deferred acceptance is the student-optimal stable outcome") {
  for (const auto& p : mech_corpus()) {
    const auto da = run_named("sosm", p);
    CHECK(incontest::is_stable(p, da));
    for (const auto& v : incontest::enumerate_stable(p))
      for (int i = 0; i < p.num_students(); ++i)
        CHECK(p.weakly_prefers(i, da.seat[i], v.seat[i]));
  }
}

TEST_CASE("mechanisms: every run is individually rational and non-wasteful") {
  for (const auto& p : mech_corpus())
    for (const auto& name : kAllSpecs) {
      const auto a = run_named(name, p);
      CHECK(incontest::is_individually_rational(p, a));
      CHECK(incontest::is_non_wasteful(p, a));
    }
}

TEST_CASE("mechanisms: trading families produce efficient outcomes") {
  for (const auto& p : mech_corpus())
    for (const auto& name : {"ttc", "ct", "fct", "ettc", "seadam"})
      CHECK(incontest::is_efficient(p, run_named(name, p)));
}

TEST_CASE("mechanisms: settle-and-drop weakly improves on deferred acceptance") {
  for (const auto& p : mech_corpus()) {
    const auto da = run_named("sosm", p);
    const auto sd = run_named("seadam", p);
    CHECK((sd == da || incontest::pareto_dominates(p, sd, da)));
  }

  const auto k = kesten_economy();
  const auto da = run_named("sosm", k);
  expect_outcome(k, da, {{"i1", "s1"}, {"i2", "s2"}, {"i3", ""}});
  const auto sd = run_named("seadam", k);
  expect_outcome(k, sd, {{"i1", "s2"}, {"i2", "s1"}, {"i3", ""}});
  CHECK(incontest::pareto_dominates(k, sd, da));
}

TEST_CASE("mechanisms: traces replay to the reported outcome") {
  for (const auto& p : mech_corpus())
    for (const auto& name : kAllSpecs) {
      const auto spec = incontest::parse_mechanism_spec(name);
      const auto run = incontest::run_mechanism(spec, p);
      CHECK(run.spec == spec);
      CHECK(incontest::replay_trace(p, run.trace) == run.outcome);
      CHECK(incontest::run_spec(spec, p) == run.outcome);
    }
}

TEST_CASE("mechanisms: list caps are enforced, never silently applied") {
  const auto t2 = test::fixture("t2.json");  // three-school lists
  for (const auto& base : {"sosm", "boston", "ettc"}) {
    const auto spec = incontest::parse_mechanism_spec(std::string(base) + "@k=2");
    CHECK_THROWS_AS(incontest::run_spec(spec, t2), Error);
    try {
      incontest::run_mechanism(spec, t2);
      FAIL_CHECK("expected a cap violation");
    } catch (const Error& e) {
      CHECK(e.code == Err::kListCapExceeded);
    }
  }
  const auto ok = incontest::parse_mechanism_spec("sosm@k=3");
  CHECK(incontest::run_spec(ok, t2) == run_named("sosm", t2));
}

TEST_CASE("mechanisms: mutual-first pairs") {
  const auto t1 = test::fixture("t1.json");
  CHECK(incontest::top_top_pairs(t1) == std::vector<std::pair<int, int>>{{1, 0}});
  const auto t2 = test::fixture("t2.json");
  CHECK(incontest::top_top_pairs(t2) == std::vector<std::pair<int, int>>{{0, 0}});
  const auto t4 = test::fixture("t4.json");
  CHECK(incontest::top_top_pairs(t4).empty());
}

TEST_CASE("mechanisms: runs are deterministic") {
  const auto p = incontest::gen_problem(5, 3, 42);
  for (const auto& name : kAllSpecs) CHECK(run_named(name, p) == run_named(name, p));
}
