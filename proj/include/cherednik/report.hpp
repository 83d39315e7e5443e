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

#ifndef CHEREDNIK_REPORT_HPP
#define CHEREDNIK_REPORT_HPP

#include <string>

#include "json.hpp"

namespace cherednik {

enum class Status { pass, fail, inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

/// Outcome of one verification. A failure always carries a witness.
struct CheckResult {
  Status status = Status::pass;
  nlohmann::json witness = nlohmann::json::object();

  bool ok() const noexcept { return status == Status::pass; }
  static CheckResult fail(nlohmann::json witness) { return {Status::fail, std::move(witness)}; }
};

}  // namespace cherednik

#endif  // CHEREDNIK_REPORT_HPP
