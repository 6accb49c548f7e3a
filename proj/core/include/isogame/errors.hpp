// Copyright 2026 The isogame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ISOGAME_ERRORS_HPP_
#define ISOGAME_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace isogame {

// A quantity left the domain of the payoff model: a non-positive log
// argument, a deviation at or beyond the normalizer Z, and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An argument violates an operation's precondition (bad count, mismatched
// lengths, an individual listed in its own proximity set).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration would exceed the configured budget.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace isogame

#endif  // ISOGAME_ERRORS_HPP_
