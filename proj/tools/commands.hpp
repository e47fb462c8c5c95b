// Copyright 2026 The tildeiso Authors
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

// Subcommand implementations of the tildeiso tool. Each returns a structured
// result so that tests can drive the commands without a process boundary.

#ifndef TILDEISO_TOOLS_COMMANDS_HPP_
#define TILDEISO_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tildeiso/cube_oracle.hpp"

namespace tildeiso::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidWord = 2,
  kExitAnomaly = 3,
};

struct CommandResult {
  std::string command;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> diagnostics;
  int exit_code = kExitOk;
  // Human-readable rendering; payload.dump() is used when empty.
  std::string text;
};

struct ClassifyFlags {
  std::optional<std::size_t> oracle_bound;
  bool oracle_fallback = true;
  std::size_t threads = 1;
};

enum class EnumerateFilter { kAll, kIsometric, kNonIsometric };

struct OracleFlags {
  std::optional<std::size_t> max_len;
  bool first_violation = false;
  bool hamming = false;
  bool source_bfs = false;
  std::size_t threads = 1;
};

CommandResult cmd_dist(const std::string& u, const std::string& v, bool show_transforms);
CommandResult cmd_transforms(const std::string& u, const std::string& v,
                             std::optional<std::size_t> cap);
CommandResult cmd_overlaps(const std::string& f, std::optional<std::size_t> q);
CommandResult cmd_classify(const std::string& f, const ClassifyFlags& flags);
CommandResult cmd_witness(const std::string& f);
CommandResult cmd_verify(const std::string& f, const std::string& u, const std::string& v);
CommandResult cmd_enumerate(std::size_t length, EnumerateFilter filter, bool canonical,
                            const ClassifyFlags& flags);
CommandResult cmd_oracle(const std::string& f, const OracleFlags& flags);
CommandResult cmd_cube(std::size_t length, const std::optional<std::string>& avoid,
                       GraphFormat format, bool hamming);
CommandResult cmd_compare(const std::string& f);

// Output for stdout: pretty JSON (sorted keys, LF) with --json, else text.
std::string render(const CommandResult& result, bool json);

// Parses argv, runs one subcommand and writes its output. Returns the exit
// code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tildeiso::cli

#endif  // TILDEISO_TOOLS_COMMANDS_HPP_
