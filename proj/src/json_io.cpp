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

#include "incontest/json_io.hpp"

#include <fstream>
#include <unordered_map>

namespace incontest {

using nlohmann::json;

namespace {

std::vector<std::string> string_array(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(Err::kParseError, std::string("missing or non-array field: ") + key);
  std::vector<std::string> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_string())
      throw Error(Err::kParseError, std::string(key) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

const json& object_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_object())
    throw Error(Err::kParseError, std::string("missing or non-object field: ") + key);
  return j.at(key);
}

void check_keys(const json& obj, const std::vector<std::string>& expected, const char* what) {
  if (obj.size() != expected.size())
    throw Error(Err::kParseError,
                std::string(what) + " must be keyed by exactly the declared identifiers");
  for (const auto& name : expected)
    if (!obj.contains(name))
      throw Error(Err::kParseError, std::string(what) + " is missing entry for " + name);
}

}  // namespace

Problem problem_from_json(const json& j) {
  if (!j.is_object()) throw Error(Err::kParseError, "instance must be a JSON object");
  auto students = string_array(j, "students");
  auto schools = string_array(j, "schools");

  std::unordered_map<std::string, int> sidx, cidx;
  for (int i = 0; i < static_cast<int>(students.size()); ++i) {
    if (!sidx.emplace(students[i], i).second)
      throw Error(Err::kDuplicateId, "duplicate student id: " + students[i]);
  }
  for (int s = 0; s < static_cast<int>(schools.size()); ++s) {
    if (!cidx.emplace(schools[s], s).second)
      throw Error(Err::kDuplicateId, "duplicate school id: " + schools[s]);
  }

  const json& caps_j = object_field(j, "capacities");
  check_keys(caps_j, schools, "capacities");
  std::vector<int> capacity(schools.size());
  for (size_t s = 0; s < schools.size(); ++s) {
    const json& v = caps_j.at(schools[s]);
    if (!v.is_number_integer())
      throw Error(Err::kNonPositiveCapacity, "capacity of " + schools[s] + " must be an integer");
    capacity[s] = v.get<int>();
  }

  const json& prefs_j = object_field(j, "preferences");
  check_keys(prefs_j, students, "preferences");
  std::vector<std::vector<int>> prefs(students.size());
  for (size_t i = 0; i < students.size(); ++i) {
    const json& row = prefs_j.at(students[i]);
    if (!row.is_array())
      throw Error(Err::kParseError, "preferences of " + students[i] + " must be an array");
    for (const auto& v : row) {
      if (!v.is_string())
        throw Error(Err::kUnknownSchoolInPreference,
                    "preference entries of " + students[i] + " must be school ids");
      auto it = cidx.find(v.get<std::string>());
      if (it == cidx.end())
        throw Error(Err::kUnknownSchoolInPreference,
                    "preference of " + students[i] + " mentions unknown school " +
                        v.get<std::string>());
      prefs[i].push_back(it->second);
    }
  }

  const json& prio_j = object_field(j, "priorities");
  check_keys(prio_j, schools, "priorities");
  std::vector<std::vector<int>> priority(schools.size());
  for (size_t s = 0; s < schools.size(); ++s) {
    const json& row = prio_j.at(schools[s]);
    if (!row.is_array())
      throw Error(Err::kParseError, "priorities of " + schools[s] + " must be an array");
    for (const auto& v : row) {
      if (!v.is_string())
        throw Error(Err::kIncompletePriority,
                    "priority entries of " + schools[s] + " must be student ids");
      auto it = sidx.find(v.get<std::string>());
      if (it == sidx.end())
        throw Error(Err::kIncompletePriority,
                    "priority of " + schools[s] + " mentions unknown student " +
                        v.get<std::string>());
      priority[s].push_back(it->second);
    }
  }

  return make_problem(std::move(students), std::move(schools), std::move(capacity),
                      std::move(prefs), std::move(priority));
}

json problem_to_json(const Problem& p) {
  json j;
  j["students"] = p.student_names;
  j["schools"] = p.school_names;
  json caps = json::object();
  for (int s = 0; s < p.num_schools(); ++s) caps[p.school_names[s]] = p.capacity[s];
  j["capacities"] = caps;
  json prefs = json::object();
  for (int i = 0; i < p.num_students(); ++i) {
    json row = json::array();
    for (int s : p.prefs[i]) row.push_back(p.school_names[s]);
    prefs[p.student_names[i]] = row;
  }
  j["preferences"] = prefs;
  json prio = json::object();
  for (int s = 0; s < p.num_schools(); ++s) {
    json row = json::array();
    for (int i : p.priority[s]) row.push_back(p.student_names[i]);
    prio[p.school_names[s]] = row;
  }
  j["priorities"] = prio;
  return j;
}

Assignment assignment_from_json(const Problem& p, const json& j) {
  if (!j.is_object() || !j.contains("seats") || !j.at("seats").is_object())
    throw Error(Err::kParseError, "assignment must be an object with a seats map");
  const json& seats = j.at("seats");
  std::vector<int> seat(p.num_students(), kSelf);
  for (auto it = seats.begin(); it != seats.end(); ++it) {
    const int i = p.student_index(it.key());
    if (it.value().is_null()) {
      seat[i] = kSelf;
    } else if (it.value().is_string()) {
      seat[i] = p.school_index(it.value().get<std::string>());
    } else {
      throw Error(Err::kParseError, "seat of " + it.key() + " must be a school id or null");
    }
  }
  return make_assignment(p, std::move(seat));
}

json assignment_to_json(const Problem& p, const Assignment& a) {
  json seats = json::object();
  for (int i = 0; i < p.num_students(); ++i) {
    if (a.seat[i] == kSelf)
      seats[p.student_names[i]] = nullptr;
    else
      seats[p.student_names[i]] = p.school_names[a.seat[i]];
  }
  return json{{"seats", seats}};
}

namespace {
json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::kParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(Err::kParseError, "invalid JSON in " + path + ": " + e.what());
  }
  return j;
}
}  // namespace

Problem load_problem(const std::string& path) { return problem_from_json(load_json(path)); }

void save_problem(const Problem& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Err::kParseError, "cannot write " + path);
  out << problem_to_json(p).dump(2) << "\n";
}

Assignment load_assignment(const Problem& p, const std::string& path) {
  return assignment_from_json(p, load_json(path));
}

void save_assignment(const Problem& p, const Assignment& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Err::kParseError, "cannot write " + path);
  out << assignment_to_json(p, a).dump(2) << "\n";
}

}  // namespace incontest
