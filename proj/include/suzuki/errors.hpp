// Copyright 2026 The szverify Authors.
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

#ifndef SUZUKI_ERRORS_HPP_
#define SUZUKI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace suzuki {

// Base class for every failure raised by the verification engine. Bad
// arguments (degree out of range, e = 0, inverting zero) use the standard
// std::invalid_argument / std::domain_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its element-count ceiling.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's documented precondition.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// A computation contradicted a claim the proof chain depends on (Sylow
// count, group order, single involution class, ...).
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace suzuki

#endif  // SUZUKI_ERRORS_HPP_
