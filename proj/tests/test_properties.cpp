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

#include <utility>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "incontest/generate.hpp"
#include "incontest/oracle.hpp"
#include "incontest/properties.hpp"

using incontest::Assignment;
using incontest::Err;
using incontest::Error;
using incontest::kSelf;
using incontest::Problem;

namespace {

std::vector<Problem> small_corpus() {
  std::vector<Problem> out;
  out.push_back(test::fixture("t1.json"));
  out.push_back(test::fixture("t2.json"));
  out.push_back(test::fixture("t3.json"));
  out.push_back(test::fixture("t4.json"));
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    out.push_back(incontest::gen_problem(4, 3, seed));
  for (std::uint64_t seed = 7; seed <= 10; ++seed)
    out.push_back(incontest::gen_problem_caps(4, {1, 2, 1}, seed));
  return out;
}

}  // namespace

TEST_CASE("properties: individual rationality") {
  const auto p = test::fixture("t2.json");
  CHECK(incontest::is_individually_rational(p, test::seats(p, {{"i1", "s1"}})));
  CHECK(incontest::is_individually_rational(p, test::seats(p, {})));

  const auto q = test::make_named({"a", "b"}, {"x"}, {2}, {{"a", {"x"}}}, {{"x", {"a", "b"}}});
  CHECK(incontest::is_individually_rational(q, test::seats(q, {{"a", "x"}})));
  CHECK_FALSE(incontest::is_individually_rational(q, test::seats(q, {{"b", "x"}})));
}

TEST_CASE("properties: wasteful witness ordering") {
  const auto p = test::fixture("t4.json");
  const auto a = test::seats(p, {{"i3", "s3"}});
  const std::vector<std::pair<int, int>> want = {{0, 0}, {1, 1}, {3, 0}, {3, 1}, {3, 2}};
  CHECK(incontest::wasteful_witnesses(p, a) == want);
  CHECK_FALSE(incontest::is_non_wasteful(p, a));

  const auto full = test::seats(p, {{"i1", "s1"}, {"i2", "s2"}, {"i3", "s3"}, {"i4", "s3"}});
  CHECK(incontest::wasteful_witnesses(p, full).empty());
  CHECK(incontest::is_non_wasteful(p, full));
}

TEST_CASE("properties: justified envy ordering") {
  const auto p = test::fixture("t2.json");
  const auto boston = test::seats(p, {{"i1", "s1"}, {"i2", "s3"}, {"i3", "s2"}});
  const std::vector<std::tuple<int, int, int>> want = {{1, 2, 1}};
  CHECK(incontest::justified_envy_triples(p, boston) == want);

  // Two lower-priority occupants at one school come out in priority order.
  const auto q = test::make_named(
      {"a", "b", "c", "d"}, {"x", "y"}, {2, 1},
      {{"a", {"x"}}, {"b", {"x"}}, {"c", {"x"}}, {"d", {"x"}}},
      {{"x", {"a", "b", "c", "d"}}, {"y", {"a", "b", "c", "d"}}});
  const auto occ = test::seats(q, {{"c", "x"}, {"d", "x"}});
  const std::vector<std::tuple<int, int, int>> want2 = {{0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}};
  CHECK(incontest::justified_envy_triples(q, occ) == want2);
}

TEST_CASE("properties: stability agrees with the definitional check") {
  for (const auto& p : small_corpus()) {
    for (const auto& a : incontest::enumerate_feasible(p)) {
      const bool got = incontest::is_stable(p, a);
      CHECK(got == test::naive_stable(p, a));
      const auto rep = incontest::stability_report(p, a);
      CHECK(rep.stable() == got);
      CHECK(rep.wasteful.empty() == incontest::is_non_wasteful(p, a));
      CHECK(rep.individually_rational == incontest::is_individually_rational(p, a));
    }
  }
}

TEST_CASE("properties: stable enumeration is the stable slice of the feasible set") {
  for (const auto& p : small_corpus()) {
    std::vector<Assignment> expect;
    for (const auto& a : incontest::enumerate_feasible(p))
      if (incontest::is_stable(p, a)) expect.push_back(a);
    CHECK(incontest::enumerate_stable(p) == expect);
  }
}

TEST_CASE("properties: pareto dominance") {
  const auto p = test::fixture("t2.json");
  const auto sosm = test::seats(p, {{"i1", "s1"}, {"i2", "s2"}, {"i3", "s3"}});
  CHECK_FALSE(incontest::pareto_dominates(p, sosm, sosm));

  const auto up = test::seats(p, {{"i1", "s1"}, {"i2", "s3"}, {"i3", "s2"}});
  CHECK_FALSE(incontest::pareto_dominates(p, up, sosm));  // i2 got worse
  const auto partial = test::seats(p, {{"i1", "s1"}, {"i3", "s2"}});
  const auto fuller = test::seats(p, {{"i1", "s1"}, {"i2", "s3"}, {"i3", "s2"}});
  CHECK(incontest::pareto_dominates(p, fuller, partial));
  CHECK_FALSE(incontest::pareto_dominates(p, partial, fuller));
}

TEST_CASE("properties: efficiency matches improvement enumeration") {
  for (const auto& p : small_corpus())
    for (const auto& a : incontest::enumerate_feasible(p)) {
      const auto ups = incontest::pareto_improvements(p, a);
      CHECK(incontest::is_efficient(p, a) == ups.empty());
      for (const auto& u : ups) CHECK(incontest::pareto_dominates(p, u, a));
    }
}

TEST_CASE("properties: efficiency check rejects oversized instances") {
  const auto big = incontest::gen_problem(7, 2, 3);
  const auto none = incontest::make_assignment(big, std::vector<int>(7, kSelf));
  CHECK_THROWS_AS(incontest::is_efficient(big, none), Error);
  try {
    incontest::is_efficient(big, none);
  } catch (const Error& e) {
    CHECK(e.code == Err::kInstanceTooLarge);
  }
}

TEST_CASE("properties: improvements over sound baselines preserve structure") {
  for (const auto& p : small_corpus())
    for (const auto& base : incontest::enumerate_feasible(p)) {
      if (!incontest::is_individually_rational(p, base)) continue;
      if (!incontest::is_non_wasteful(p, base)) continue;
      for (const auto& up : incontest::pareto_improvements(p, base)) {
        const auto rep = incontest::check_generalized_rht(p, up, base);
        CHECK(rep.pass);
        CHECK(rep.failures.empty());
      }
    }
}

TEST_CASE("properties: structural comparison enforces its premise") {
  const auto p = test::fixture("t2.json");
  const auto sosm = test::seats(p, {{"i1", "s1"}, {"i2", "s2"}, {"i3", "s3"}});
  const auto empty = test::seats(p, {});
  const auto one = test::seats(p, {{"i1", "s1"}});

  // Wasteful base.
  CHECK_THROWS_AS(incontest::check_generalized_rht(p, one, empty), Error);
  // Non-dominating pair.
  CHECK_THROWS_AS(incontest::check_generalized_rht(p, sosm, sosm), Error);

  // Base that seats a student at an unlisted school.
  const auto q = test::make_named({"a", "b"}, {"x"}, {1}, {{"a", {"x"}}}, {{"x", {"b", "a"}}});
  const auto bad = test::seats(q, {{"b", "x"}});
  const auto good = test::seats(q, {{"a", "x"}});
  try {
    incontest::check_generalized_rht(q, good, bad);
    FAIL_CHECK("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code == Err::kPreconditionViolated);
  }
}
