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

#ifndef INCONTEST_JSON_IO_HPP_
#define INCONTEST_JSON_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "incontest/model.hpp"

namespace incontest {

// Instance format:
// {
//   "students": ["i1", ...],
//   "schools": ["s1", ...],
//   "capacities": {"s1": 1, ...},
//   "preferences": {"i1": ["s1", "s2"], ...},
//   "priorities": {"s1": ["i1", "i2"], ...}
// }
// Array order is the canonical order. The three maps must be keyed by exactly
// the declared identifier sets.
Problem problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const Problem& p);

Problem load_problem(const std::string& path);
void save_problem(const Problem& p, const std::string& path);

// Assignment format: {"seats": {"i1": "s1", "i2": null, ...}}
// Emission always lists every student; null marks the outside option.
Assignment assignment_from_json(const Problem& p, const nlohmann::json& j);
nlohmann::json assignment_to_json(const Problem& p, const Assignment& a);

Assignment load_assignment(const Problem& p, const std::string& path);
void save_assignment(const Problem& p, const Assignment& a, const std::string& path);

}  // namespace incontest

#endif  // INCONTEST_JSON_IO_HPP_
