// Copyright 2026 The Authors.
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

#include "cyclomat/report.hpp"

#include <json.hpp>

namespace cyclomat {

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["claim"] = report.claim;
  j["pass"] = report.pass;
  if (report.witness) j["witness"] = *report.witness;
  if (report.witness_note) j["witness_note"] = *report.witness_note;
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.stats) stats[name] = value;
  j["stats"] = stats;
  return j.dump();
}

}  // namespace cyclomat
