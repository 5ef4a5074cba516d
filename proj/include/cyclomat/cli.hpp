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

#ifndef CYCLOMAT_CLI_HPP
#define CYCLOMAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "cyclomat/report.hpp"

namespace cyclomat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification failed; witness printed
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;
inline constexpr int kExitInternal = 4;

// args excludes the program name. Results go to `out`, diagnostics and
// elapsed time to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Writes `report` the way verb `verb` would (empty argument echo) and returns
// the exit code it maps to.
int write_report(const std::string& verb, const VerificationReport& report,
                 bool json, std::ostream& out);

}  // namespace cyclomat::cli

#endif  // CYCLOMAT_CLI_HPP
