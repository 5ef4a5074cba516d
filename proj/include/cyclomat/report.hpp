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

#ifndef CYCLOMAT_REPORT_HPP
#define CYCLOMAT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclomat {

// Outcome of a verification. A failing report always carries a witness.
struct VerificationReport {
  std::string claim;
  bool pass = true;
  // Ground-set positions (or another description) of the first
  // counterexample in a deterministic order.
  std::optional<std::vector<std::uint64_t>> witness;
  std::optional<std::string> witness_note;
  // Ordered (name, value) pairs; values are rendered text so that big
  // integers and polynomials round-trip exactly.
  std::vector<std::pair<std::string, std::string>> stats;

  void add_stat(std::string name, std::string value) {
    stats.emplace_back(std::move(name), std::move(value));
  }
  void fail(std::vector<std::uint64_t> w, std::string note = {}) {
    if (!pass) return;  // keep the first witness
    pass = false;
    witness = std::move(w);
    if (!note.empty()) witness_note = std::move(note);
  }
  // Records a failed sub-check without a subset witness.
  void fail_check(std::string note) { fail({}, std::move(note)); }
};

std::string to_json(const VerificationReport& report);

}  // namespace cyclomat

#endif  // CYCLOMAT_REPORT_HPP
