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

#include <doctest.h>

#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "cli_invocations.hpp"
#include "cyclomat/cli.hpp"

using namespace cyclomat;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> with(std::vector<std::string> front,
                              const std::vector<std::string>& args) {
  front.insert(front.end(), args.begin(), args.end());
  return front;
}

}  // namespace

TEST_CASE("plain results") {
  const Result phi = run({"phi", "12"});
  CHECK(phi.code == cli::kExitOk);
  CHECK(phi.out == "4\n");
  CHECK(phi.err.find("elapsed_s:") != std::string::npos);
  CHECK(run({"bases", "6"}).out == "12\n");
  CHECK(run({"bolker", "2", "3"}).out == "12\n");
  CHECK(run({"cyclo-poly", "12"}).out == "1 - x^2 + x^4\n");
  CHECK(run({"tutte", "--kpq", "2", "2"}).out == "y + x + x^2 + x^3\n");
  CHECK(run({"forest-enum", "2", "3", "--restricted", "1"}).out == "x1*x2\nweight: 3\n");
  const Result listed = run({"--list", "bases", "4"});
  CHECK(listed.out.rfind("4\n{z^0, z^1}\n", 0) == 0);
}

TEST_CASE("verification JSON envelope") {
  const Result r = run({"verify-duality", "6", "--json"});
  CHECK(r.code == cli::kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["v"] == 1);
  CHECK(j["command"]["verb"] == "verify-duality");
  CHECK(j["result"]["claim"] == "theorem1");
  CHECK(j["result"]["pass"] == true);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"phi", "-3"}).code == cli::kExitUsage);
  CHECK(run({"phi", "twelve"}).code == cli::kExitUsage);
  CHECK(run({"phi"}).code == cli::kExitUsage);
  CHECK(run({"phi", "12", "13"}).code == cli::kExitUsage);
  CHECK(run({"tutte", "--mu", "6", "--kpq", "2", "2"}).code == cli::kExitUsage);
  CHECK(run({"star-tree", "2", "4"}).code == cli::kExitUsage);
  CHECK(run({"verify-prop6", "3", "2"}).code == cli::kExitUsage);
  CHECK(run({"forest-enum", "2", "3", "--restricted", "2"}).code == cli::kExitUsage);
  const Result e = run({"phi", "0"});
  CHECK(e.code == cli::kExitUsage);
  CHECK(e.out.empty());
  CHECK(!e.err.empty());
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("limit refusals exit 3") {
  CHECK(run({"bases", "40"}).code == cli::kExitLimit);
  CHECK(run({"--limit-bits", "4", "bases", "6"}).code == cli::kExitLimit);
  CHECK(run({"--limit-bits", "6", "bases", "6"}).code == cli::kExitOk);
  CHECK(run({"--limit-bits", "8", "forest-enum", "3", "3"}).code == cli::kExitLimit);
}

TEST_CASE("failed verifications exit 1 with a witness") {
  VerificationReport r;
  r.claim = "example";
  r.fail({3, 5}, "not a basis");
  r.fail({7}, "later failure");

  std::ostringstream text;
  CHECK(cli::write_report("verify-duality", r, false, text) == cli::kExitFailed);
  CHECK(text.str().find("pass: false\nwitness: 3 5\nwitness_note: not a basis\n") !=
        std::string::npos);

  std::ostringstream json;
  CHECK(cli::write_report("verify-duality", r, true, json) == cli::kExitFailed);
  const Json j = Json::parse(json.str());
  CHECK(j["result"]["pass"] == false);
  CHECK(j["result"]["witness"] == Json::array({3, 5}));

  VerificationReport note_only;
  note_only.claim = "example";
  note_only.fail_check("tree count differs");
  std::ostringstream out;
  CHECK(cli::write_report("verify-prop6", note_only, true, out) == cli::kExitFailed);
  CHECK(Json::parse(out.str())["result"].contains("witness"));
}

TEST_CASE("every verb emits one JSON object") {
  for (const auto& args : cli_cases::invocations()) {
    const Result r = run(with({"--json"}, args));
    CHECK_MESSAGE(r.code == cli::kExitOk, cli_cases::joined(args));
    const Json j = Json::parse(r.out);
    CHECK(j.is_object());
    CHECK(j["v"] == 1);
    CHECK(j["result"].is_object());
    // A single line: one object, nothing after it.
    CHECK(r.out.find('\n') == r.out.size() - 1);
  }
}

TEST_CASE("output is identical across worker counts") {
  for (const auto& args : cli_cases::invocations())
    for (bool json : {false, true}) {
      std::vector<std::string> base = json ? std::vector<std::string>{"--json"}
                                           : std::vector<std::string>{};
      const Result serial = run(with(with(base, {"--threads", "1"}), args));
      const Result parallel = run(with(with(base, {"--threads", "8"}), args));
      CHECK_MESSAGE(serial.out == parallel.out, cli_cases::joined(args));
      CHECK(serial.code == parallel.code);
    }
}

TEST_CASE("installed binary maps exit codes") {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(CYCLOMAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[256];
    while (std::fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
    const int raw = pclose(pipe);
    return std::pair{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
  };
  CHECK(status("phi 12") == std::pair{0, std::string("4\n")});
  CHECK(status("bogus").first == 2);
  CHECK(status("bases 40").first == 3);
}
