// Copyright 2026 The cherednik-verify Authors
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

#ifndef CHEREDNIK_ERRORS_HPP
#define CHEREDNIK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cherednik {

/// Bad input from a caller: unknown catalog key, malformed signature,
/// violated precondition. Maps to the usage exit code of the CLI.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact arithmetic was asked to divide by zero.
class DivisionByZero : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An internal consistency check failed: a division that must be exact was
/// not, a matrix that must be invertible was singular, and so on. This is a
/// bug or corrupted data, never a user error.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cherednik

#endif  // CHEREDNIK_ERRORS_HPP
