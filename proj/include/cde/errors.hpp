// Copyright 2026 The CDE Fairness Authors
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

#ifndef CDE_ERRORS_HPP
#define CDE_ERRORS_HPP

#include <stdexcept>

namespace cde {

// An instance or region file that does not conform to the documented format.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sum-rate budget that cannot be met: alpha below the minimum sum-rate, or
// a starting vector outside the feasible region.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation whose cost would exceed the desk-scale combinatorial guards
// (client count, enumeration size).
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cde

#endif  // CDE_ERRORS_HPP
