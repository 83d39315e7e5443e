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

#ifndef CHEREDNIK_CHECKS_HPP
#define CHEREDNIK_CHECKS_HPP

#include <string>
#include <vector>

#include "cherednik/report.hpp"
#include "json.hpp"

namespace cherednik::checks {

/// One executed check: {check, id, inputs, status, witness, wall_time_ms}.
struct Report {
  std::string check;
  std::string id;
  nlohmann::json inputs;
  Status status = Status::pass;
  nlohmann::json witness;
  double wall_time_ms = 0.0;

  nlohmann::json to_json() const;
};

/// Names accepted by run().
const std::vector<std::string>& names();

/// Inputs with defaults filled in. Throws InvalidInput on unknown checks,
/// unknown keys or values of the wrong shape.
nlohmann::json normalize(const std::string& check, const nlohmann::json& inputs);

/// Stable identifier built from the check name and normalized inputs.
std::string report_id(const std::string& check, const nlohmann::json& normalized);

/// Runs one check. InvalidInput and InternalInconsistency propagate.
Report run(const std::string& check, const nlohmann::json& inputs);

/// The list of {check, inputs} making up "verify all". quick keeps every
/// item at the parameters of the acceptance criteria; the full plan adds
/// larger degrees and sizes.
nlohmann::json suite(bool quick);

}  // namespace cherednik::checks

#endif  // CHEREDNIK_CHECKS_HPP
