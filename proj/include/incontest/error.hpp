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

#ifndef INCONTEST_ERROR_HPP_
#define INCONTEST_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace incontest {

enum class Err {
  kDuplicateId,
  kUnknownSchoolInPreference,
  kIncompletePriority,
  kNonPositiveCapacity,
  kUnknownId,
  kEmptySet,
  kInconsistentAssignment,
  kInstanceTooLarge,
  kBudgetExceeded,
  kIsHighPrioritySet,
  kInvalidPeriod,
  kListCapExceeded,
  kPreconditionViolated,
  kBadMechanismSpec,
  kParseError,
};

// Single exception type for all domain errors; `code` is machine-checkable,
// `what()` carries human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg) : std::runtime_error(msg), code(code) {}
  Err code;
};

const char* err_name(Err code);

}  // namespace incontest

#endif  // INCONTEST_ERROR_HPP_
