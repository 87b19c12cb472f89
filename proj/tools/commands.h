// Copyright 2026 The pathsum Authors
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
#ifndef PATHSUM_TOOLS_COMMANDS_H
#define PATHSUM_TOOLS_COMMANDS_H

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pathsum::cli {

/// Files written by a command, relative to the output directory, and whether the run
/// met its own success condition (only the suite can fail this way).
struct CommandOutput {
    std::vector<std::string> files;
    bool ok = true;
};

struct Command {
    std::string name;
    std::string description;
    /// Every configurable key with its built-in default; the JSON type fixes the key's type.
    nlohmann::json defaults;
    /// Keys holding angles (converted from degrees when --degrees is given).
    std::vector<std::string> angle_keys;
    std::function<CommandOutput(const nlohmann::json &config, const std::filesystem::path &out_dir)> run;
};

const std::vector<Command> &commands();
const Command *find_command(const std::string &name);

}  // namespace pathsum::cli

#endif
