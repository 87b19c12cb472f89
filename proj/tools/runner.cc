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

#include "runner.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "pathsum/errors.h"
#include "pathsum/parallel.h"

namespace pathsum::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string kebab(const std::string &key) {
    std::string out = key;
    std::replace(out.begin(), out.end(), '_', '-');
    return out;
}

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

bool is_angle(const Command &command, const std::string &key) {
    return std::find(command.angle_keys.begin(), command.angle_keys.end(), key) != command.angle_keys.end();
}

// Coerce value to the type of the default, or throw.
json coerce(const std::string &key, const json &def, const json &value) {
    auto mismatch = [&] {
        return DomainError("config key '" + key + "' expects " + std::string(def.type_name()) + ", got " +
                           value.dump());
    };
    if (def.is_number_float()) {
        if (!value.is_number()) throw mismatch();
        return value.get<double>();
    }
    if (def.is_number_integer()) {
        if (value.is_number_integer()) return value;
        if (value.is_number_float()) {
            double v = value.get<double>();
            if (v == std::floor(v) && std::abs(v) < 9e15) return static_cast<std::int64_t>(v);
        }
        throw mismatch();
    }
    if (def.type() != value.type()) throw mismatch();
    return value;
}

json parse_cli_value(const std::string &key, const json &def, const std::string &raw) {
    if (def.is_string()) {
        return raw;
    }
    json parsed = json::parse(raw, nullptr, false);
    if (parsed.is_discarded()) {
        throw DomainError("--" + kebab(key) + ": cannot parse '" + raw + "'");
    }
    return coerce(key, def, parsed);
}

std::uint64_t parse_seed(const std::string &raw, const char *source) {
    try {
        std::size_t used = 0;
        auto v = std::stoull(raw, &used);
        if (used == raw.size() && raw.find('-') == std::string::npos) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw DomainError(std::string(source) + ": seed must be a non-negative integer, got '" + raw + "'");
}

json read_config_file(const Command &command, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot read config file '" + path + "'");
    }
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw DomainError("config file '" + path + "' is not a JSON object");
    }
    // A run manifest replays its resolved config.
    if (doc.contains("experiment") && doc.contains("config") && doc.at("config").is_object()) {
        if (doc.at("experiment") != command.name) {
            throw DomainError("manifest is for '" + doc.at("experiment").dump() + "', not '" + command.name + "'");
        }
        return doc.at("config");
    }
    return doc;
}

void write_manifest(const fs::path &out_dir, const json &manifest) {
    std::ofstream out(out_dir / "run_manifest.json", std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write run_manifest.json");
    }
    out << manifest.dump(2) << '\n';
}

struct Invocation {
    const Command *command = nullptr;
    Overrides overrides;
    std::string out_dir = "out";
    std::optional<std::size_t> threads;
};

int execute(const Invocation &inv) {
    const Command &command = *inv.command;
    std::uint64_t seed = 1;
    json config = resolve_config(command, inv.overrides, seed);

    if (inv.threads) {
        set_max_threads(*inv.threads);
    }
    fs::path out_dir(inv.out_dir);
    fs::create_directories(out_dir);

    auto start = std::chrono::steady_clock::now();
    CommandOutput output = command.run(config, out_dir);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    write_manifest(out_dir, {{"experiment", command.name},
                             {"config", config},
                             {"seed", seed},
                             {"tool_version", PATHSUM_VERSION},
                             {"outputs", output.files},
                             {"duration_seconds", elapsed.count()},
                             {"threads", max_threads()}});
    for (const auto &f : output.files) {
        std::cout << (out_dir / f).string() << '\n';
    }
    return output.ok ? kExitOk : kExitSuiteFailed;
}

}  // namespace

json resolve_config(const Command &command, const Overrides &overrides, std::uint64_t &seed_out) {
    json config = command.defaults;
    std::uint64_t seed = config.contains("seed") ? config.at("seed").get<std::uint64_t>() : 1;

    if (const char *env = std::getenv("PATHSUM_SEED"); env && *env) {
        seed = parse_seed(env, "PATHSUM_SEED");
    }
    if (config.contains("seed")) {
        config["seed"] = seed;
    }

    if (overrides.config_path) {
        json file = read_config_file(command, *overrides.config_path);
        for (const auto &[key, value] : file.items()) {
            if (!command.defaults.contains(key)) {
                throw DomainError("unknown config key '" + key + "' for " + command.name);
            }
            json v = coerce(key, command.defaults.at(key), value);
            if (overrides.degrees && is_angle(command, key)) {
                v = v.get<double>() * kDegree;
            }
            config[key] = v;
        }
        if (config.contains("seed")) {
            seed = config.at("seed").get<std::uint64_t>();
        }
    }

    for (const auto &[key, raw] : overrides.keys) {
        if (!command.defaults.contains(key)) {
            throw DomainError("unknown config key '" + key + "' for " + command.name);
        }
        json v = parse_cli_value(key, command.defaults.at(key), raw);
        if (overrides.degrees && is_angle(command, key)) {
            v = v.get<double>() * kDegree;
        }
        config[key] = v;
    }
    if (overrides.seed) {
        seed = *overrides.seed;
        if (config.contains("seed")) {
            config["seed"] = seed;
        }
    }
    seed_out = seed;
    return config;
}

int main_entry(int argc, char **argv) {
    CLI::App app{"pathsum: path-integral amplitude experiments"};
    app.set_version_flag("--version", PATHSUM_VERSION);
    app.require_subcommand(1);

    std::vector<Invocation> invocations(commands().size());
    std::vector<std::string> seed_raw(commands().size());
    for (std::size_t i = 0; i < commands().size(); ++i) {
        const Command &command = commands()[i];
        Invocation &inv = invocations[i];
        inv.command = &command;
        CLI::App *sub = app.add_subcommand(command.name, command.description);
        sub->add_option("--config", inv.overrides.config_path, "JSON config or run_manifest.json to replay");
        sub->add_option("--out", inv.out_dir, "Output directory")->capture_default_str();
        sub->add_option("--seed", seed_raw[i], "Random seed (overrides PATHSUM_SEED)");
        sub->add_option("--threads", inv.threads, "Worker thread cap")->check(CLI::PositiveNumber);
        sub->add_flag("--degrees", inv.overrides.degrees, "Angles are given in degrees");
        for (const auto &[key, def] : command.defaults.items()) {
            if (key == "seed") {
                continue;
            }
            std::string flag = "--" + kebab(key);
            std::string k = key;
            sub->add_option_function<std::string>(
                   flag, [&inv, k](const std::string &v) { inv.overrides.keys[k] = v; },
                   "default " + def.dump())
                ->type_name(def.is_string() ? "TEXT" : "NUMBER");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (std::size_t i = 0; i < commands().size(); ++i) {
        if (!app.got_subcommand(commands()[i].name)) {
            continue;
        }
        Invocation &inv = invocations[i];
        try {
            if (!seed_raw[i].empty()) {
                inv.overrides.seed = parse_seed(seed_raw[i], "--seed");
            }
            return execute(inv);
        } catch (const ResourceError &e) {
            std::cerr << "pathsum: resource limit: " << e.what() << '\n';
            return kExitResource;
        } catch (const std::invalid_argument &e) {
            std::cerr << "pathsum: " << e.what() << '\n';
            return kExitUsage;
        } catch (const std::exception &e) {
            std::cerr << "pathsum: internal error: " << e.what() << '\n';
            return kExitInternal;
        }
    }
    return kExitUsage;
}

}  // namespace pathsum::cli
