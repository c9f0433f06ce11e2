// Copyright 2026 the kexcore authors
//
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

#ifndef KEX_ERRORS_HPP
#define KEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kex {

struct KexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// economy construction / io
struct DuplicateIdError : KexError { using KexError::KexError; };
struct NonDenseIdError : KexError { using KexError::KexError; };
struct DanglingArcError : KexError { using KexError::KexError; };
struct SelfLoopError : KexError { using KexError::KexError; };
struct BadKindArcError : KexError { using KexError::KexError; };
struct UnknownOrgError : KexError { using KexError::KexError; };
struct ShapeMismatchError : KexError { using KexError::KexError; };
struct IoError : KexError { using KexError::KexError; };

// SchemaError carries a JSON pointer to the offending field.
struct SchemaError : KexError {
    explicit SchemaError(const std::string& json_pointer, const std::string& what = "")
        : KexError(what.empty() ? "schema error at " + json_pointer : what),
          pointer(json_pointer) {}
    std::string pointer;
};

// lp / ilp
struct InfeasibleModelError : KexError { using KexError::KexError; };
struct UnboundedObjectiveError : KexError { using KexError::KexError; };
struct ArityMismatchError : KexError { using KexError::KexError; };

// cycle / exchange
struct OverlappingCyclesError : KexError { using KexError::KexError; };

// scarf / rounding
struct InstanceTooLargeError : KexError { using KexError::KexError; };
struct EmptyColumnSpaceError : KexError { using KexError::KexError; };
struct PivotBudgetExceededError : KexError { using KexError::KexError; };
struct CapacityViolationError : KexError { using KexError::KexError; };
struct TargetMissError : KexError { using KexError::KexError; };
struct NonterminationGuardError : KexError { using KexError::KexError; };

}  // namespace kex

#endif  // KEX_ERRORS_HPP
