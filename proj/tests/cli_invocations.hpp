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

#ifndef CYCLOMAT_TESTS_CLI_INVOCATIONS_HPP
#define CYCLOMAT_TESTS_CLI_INVOCATIONS_HPP

#include <string>
#include <vector>

namespace cli_cases {

// One small invocation per verb (and per verb mode), all exit 0.
inline const std::vector<std::vector<std::string>>& invocations() {
  static const std::vector<std::vector<std::string>> cases{
      {"phi", "12"},
      {"cyclo-poly", "30"},
      {"mu-matrix", "6"},
      {"bases", "12"},
      {"--list", "bases", "6"},
      {"tutte", "--mu", "10"},
      {"tutte", "--kpq", "2", "3"},
      {"verify-duality", "12"},
      {"bolker", "2", "3", "3"},
      {"adin", "2", "3"},
      {"star-tree", "2", "3", "5"},
      {"coboundary", "2", "3"},
      {"chromatic", "2", "3"},
      {"verify-prop4", "2", "2", "--qmax", "5"},
      {"indep-gf", "12"},
      {"indep-gf", "6", "--verify"},
      {"forest-enum", "3", "3"},
      {"forest-enum", "3", "4", "--restricted", "2"},
      {"verify-prop6", "2", "4"},
      {"corollary2", "18"},
  };
  return cases;
}

inline std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace cli_cases

#endif  // CYCLOMAT_TESTS_CLI_INVOCATIONS_HPP
