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

#include "incontest/generate.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "incontest/error.hpp"

namespace incontest {

std::uint64_t Rng::bounded(std::uint64_t n) {
  if (n == 0) throw Error(Err::kPreconditionViolated, "bounded draw over empty range");
  const std::uint64_t rem = std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = eng_();
    const std::uint64_t r = x % n;
    if (x - r <= std::numeric_limits<std::uint64_t>::max() - rem) return r;
  }
}

Problem gen_problem_caps(int n_students, std::vector<int> capacities, std::uint64_t seed) {
  if (n_students < 1) throw Error(Err::kPreconditionViolated, "need at least one student");
  const int m = static_cast<int>(capacities.size());
  if (m < 1) throw Error(Err::kPreconditionViolated, "need at least one school");
  Rng rng(seed);

  std::vector<std::string> students, schools;
  for (int i = 0; i < n_students; ++i) students.push_back("i" + std::to_string(i + 1));
  for (int s = 0; s < m; ++s) schools.push_back("s" + std::to_string(s + 1));

  std::vector<std::vector<SchoolIdx>> prefs;
  std::vector<SchoolIdx> pool(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) pool[s] = s;
  for (int i = 0; i < n_students; ++i) {
    rng.shuffle(pool);
    const int len = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m) + 1));
    prefs.emplace_back(pool.begin(), pool.begin() + len);
  }

  std::vector<std::vector<StudentIdx>> priorities;
  std::vector<StudentIdx> order(static_cast<std::size_t>(n_students));
  for (int i = 0; i < n_students; ++i) order[i] = i;
  for (int s = 0; s < m; ++s) {
    rng.shuffle(order);
    priorities.push_back(order);
  }

  return make_problem(std::move(students), std::move(schools), std::move(capacities),
                      std::move(prefs), std::move(priorities));
}

Problem gen_problem(int n_students, int n_schools, std::uint64_t seed) {
  if (n_schools < 1) throw Error(Err::kPreconditionViolated, "need at least one school");
  return gen_problem_caps(n_students, std::vector<int>(n_schools, 1), seed);
}

std::vector<Problem> priority_family_frames(int n_students, int n_schools) {
  if (n_students < 1 || n_schools < 1)
    throw Error(Err::kPreconditionViolated, "need at least one student and one school");
  std::vector<std::string> students, schools;
  for (int i = 0; i < n_students; ++i) students.push_back("i" + std::to_string(i + 1));
  for (int s = 0; s < n_schools; ++s) schools.push_back("s" + std::to_string(s + 1));

  std::vector<std::vector<StudentIdx>> perms;
  std::vector<StudentIdx> perm(static_cast<std::size_t>(n_students));
  for (int i = 0; i < n_students; ++i) perm[i] = i;
  do {
    perms.push_back(perm);
  } while (static_cast<int>(perms.size()) < 6 &&
           std::next_permutation(perm.begin(), perm.end()));

  const int count = static_cast<int>(perms.size());
  std::vector<Problem> out;
  const std::vector<std::vector<SchoolIdx>> empty_prefs(
      static_cast<std::size_t>(n_students));
  for (int t = 0; t < count; ++t) {
    std::vector<std::vector<StudentIdx>> same(static_cast<std::size_t>(n_schools),
                                              perms[t]);
    out.push_back(make_problem(students, schools, std::vector<int>(n_schools, 1),
                               empty_prefs, same));
    std::vector<std::vector<StudentIdx>> shifted;
    for (int s = 0; s < n_schools; ++s) shifted.push_back(perms[(t + s) % count]);
    out.push_back(make_problem(students, schools, std::vector<int>(n_schools, 1),
                               empty_prefs, shifted));
  }
  return out;
}

}  // namespace incontest
