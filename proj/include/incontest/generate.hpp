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

#ifndef INCONTEST_GENERATE_HPP_
#define INCONTEST_GENERATE_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "incontest/model.hpp"

namespace incontest {

// Deterministic RNG wrapper; the bounded draw avoids distribution classes so
// the same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform draw in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t bounded(std::uint64_t n);

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t t = v.size(); t > 1; --t) {
      const std::size_t j = static_cast<std::size_t>(bounded(t));
      std::swap(v[t - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Random problem: students i1..iN, schools s1..sM, the given capacities,
// uniform priority orders, and independent preference lists whose lengths are
// uniform on 0..M.
Problem gen_problem_caps(int n_students, std::vector<int> capacities, std::uint64_t seed);

// Unit-capacity convenience wrapper.
Problem gen_problem(int n_students, int n_schools, std::uint64_t seed);

// Fixed frame family for exhaustive sweeps: unit capacities, empty preference
// lists, priority orders drawn from the first min(6, n!) lexicographic
// permutations P_t. Frame 2t gives every school the order P_t; frame 2t+1
// gives school j the order P_(t+j mod count). 12 frames for 3+ students.
std::vector<Problem> priority_family_frames(int n_students, int n_schools);

}  // namespace incontest

#endif  // INCONTEST_GENERATE_HPP_
