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

#ifndef INCONTEST_MATCHING_HPP_
#define INCONTEST_MATCHING_HPP_

#include <vector>

namespace incontest {

// Maximum bipartite matching, Hopcroft-Karp. adj[u] lists right vertices
// reachable from left vertex u. Returns the matching size; if match_left is
// non-null it receives, per left vertex, the matched right vertex or -1.
int max_bipartite_matching(int n_left, int n_right,
                           const std::vector<std::vector<int>>& adj,
                           std::vector<int>* match_left = nullptr);

}  // namespace incontest

#endif  // INCONTEST_MATCHING_HPP_
