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

#ifndef PATHSUM_TOOLS_RUNNER_H
#define PATHSUM_TOOLS_RUNNER_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "commands.h"

namespace pathsum::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitResource = 3,
    kExitSuiteFailed = 4,
};

/// Overrides collected from the command line, all optional.
struct Overrides {
    std::optional<std::string> config_path;
    std::optional<std::uint64_t> seed;
    bool degrees = false;
    /// Raw --key value strings, keyed by config key (snake_case).
    std::map<std::string, std::string> keys;
};

/// Defaults, then PATHSUM_SEED, then the config file, then command-line keys.
/// Throws DomainError on unknown keys, type mismatches or a manifest for another command.
nlohmann::json resolve_config(const Command &command, const Overrides &overrides, std::uint64_t &seed_out);

std::string kebab(const std::string &key);

int main_entry(int argc, char **argv);

}  // namespace pathsum::cli

#endif
