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


// Drives the pathsum executable end to end.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "pathsum/amplitude.h"
#include "runner.h"

namespace pathsum::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path scratch(const std::string &name) {
    fs::path dir = fs::path(PATHSUM_TEST_TMP) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run(const std::string &args, const std::string &env = "") {
    std::string cmd = "env -u PATHSUM_SEED -u PATHSUM_SUITE_TAMPER " + env + " '" PATHSUM_TOOL_PATH "' " + args +
                      " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json read_json(const fs::path &p) {
    return json::parse(slurp(p));
}

TEST(Cli, interferometer_curve) {
    auto dir = scratch("interferometer");
    ASSERT_EQ(run("interferometer --alpha-grid 25 --beta 0.0 --out " + dir.string()), 0);
    std::istringstream csv(slurp(dir / "interferometer.csv"));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "alpha,beta,p_uu,p_ud,p_du,p_dd");
    int rows = 0;
    while (std::getline(csv, line)) {
        rows++;
    }
    EXPECT_EQ(rows, 25);
    auto manifest = read_json(dir / "run_manifest.json");
    EXPECT_EQ(manifest.at("experiment"), "interferometer");
    EXPECT_EQ(manifest.at("config").at("alpha_grid"), 25);
    for (const char *key : {"seed", "tool_version", "outputs", "duration_seconds", "threads"}) {
        EXPECT_TRUE(manifest.contains(key)) << key;
    }
}

TEST(Cli, chsh_and_ghz_reports) {
    auto dir = scratch("bell");
    ASSERT_EQ(run("chsh --out " + dir.string()), 0);
    auto chsh = read_json(dir / "chsh.json");
    EXPECT_NEAR(chsh.at("chsh_quantum").get<double>(), 2.8284, 1e-4);
    EXPECT_EQ(chsh.at("chsh_lhv_max").get<double>(), 2.0);
    ASSERT_EQ(run("ghz --out " + dir.string()), 0);
    EXPECT_EQ(read_json(dir / "ghz.json").at("mermin_match_count"), 0);
}

TEST(Cli, rings_factor_json) {
    auto dir = scratch("rings");
    ASSERT_EQ(run("rings --theta 0 --alpha 0.9 --beta 0.4 --p 1 --out " + dir.string()), 0);
    auto j = read_json(dir / "rings.json");
    EXPECT_NEAR(j.at("f_re").get<double>(), std::cos(0.5), 1e-12);
    EXPECT_NEAR(j.at("f_im").get<double>(), std::sin(0.5), 1e-12);
}

TEST(Cli, degrees_flag_converts_angles) {
    auto dir = scratch("degrees");
    ASSERT_EQ(run("spin --alpha-grid 4 --beta 90 --degrees --out " + dir.string()), 0);
    EXPECT_NEAR(read_json(dir / "run_manifest.json").at("config").at("beta").get<double>(), kPi / 2, 1e-15);
}

TEST(Cli, stream_replay_is_byte_identical) {
    auto a = scratch("stream_a");
    auto b = scratch("stream_b");
    ASSERT_EQ(run("stream --experiment interferometer --alpha 0.4 --beta 0.1 --n-trials 20000 --seed 5 --out " +
                  a.string()),
              0);
    ASSERT_EQ(run("stream --config " + (a / "run_manifest.json").string() + " --threads 3 --out " + b.string()), 0);
    EXPECT_EQ(slurp(a / "events.csv"), slurp(b / "events.csv"));
    EXPECT_EQ(slurp(a / "stream_report.json"), slurp(b / "stream_report.json"));
}

TEST(Cli, seed_precedence) {
    auto env = scratch("seed_env");
    auto cli = scratch("seed_cli");
    ASSERT_EQ(run("stream --n-trials 100 --out " + env.string(), "PATHSUM_SEED=42"), 0);
    EXPECT_EQ(read_json(env / "run_manifest.json").at("config").at("seed"), 42);
    fs::path cfg = cli / "cfg.json";
    std::ofstream(cfg) << R"({"seed": 7, "n_trials": 100})";
    ASSERT_EQ(run("stream --config " + cfg.string() + " --out " + cli.string(), "PATHSUM_SEED=42"), 0);
    EXPECT_EQ(read_json(cli / "run_manifest.json").at("seed"), 7);
    ASSERT_EQ(run("stream --config " + cfg.string() + " --seed 9 --out " + cli.string(), "PATHSUM_SEED=42"), 0);
    EXPECT_EQ(read_json(cli / "run_manifest.json").at("seed"), 9);
}

TEST(Cli, suite_summary_is_deterministic) {
    auto a = scratch("suite_a");
    auto b = scratch("suite_b");
    ASSERT_EQ(run("suite --out " + a.string()), 0);
    ASSERT_EQ(run("suite --threads 1 --out " + b.string()), 0);
    EXPECT_EQ(slurp(a / "suite_summary.json"), slurp(b / "suite_summary.json"));
    EXPECT_TRUE(read_json(a / "suite_summary.json").at("all_passed").get<bool>());
}

TEST(Cli, tampered_suite_fails) {
    auto dir = scratch("suite_tamper");
    EXPECT_EQ(run("suite --out " + dir.string(), "PATHSUM_SUITE_TAMPER=6"), 4);
    EXPECT_FALSE(read_json(dir / "suite_summary.json").at("all_passed").get<bool>());
}

TEST(Cli, exit_codes) {
    auto dir = scratch("errors");
    EXPECT_EQ(run("interferometer --no-such-flag 1 --out " + dir.string()), 2);
    EXPECT_EQ(run("not-a-command"), 2);
    EXPECT_EQ(run(""), 2);
    EXPECT_EQ(run("ring --theta 7 --out " + dir.string()), 2);
    EXPECT_EQ(run("spin --beta abc --out " + dir.string()), 2);
    EXPECT_EQ(run("stream --seed -3 --out " + dir.string()), 2);
    EXPECT_EQ(run("free --method enumeration --out " + dir.string()), 3);
    fs::path bad = dir / "bad.json";
    std::ofstream(bad) << R"({"unknown_key": 1})";
    EXPECT_EQ(run("spin --config " + bad.string() + " --out " + dir.string()), 2);
    fs::path wrong = dir / "wrong.json";
    std::ofstream(wrong) << R"({"experiment": "ring", "config": {}})";
    EXPECT_EQ(run("spin --config " + wrong.string() + " --out " + dir.string()), 2);
    EXPECT_EQ(run("--version"), 0);
}

TEST(Cli, writes_only_inside_out_dir) {
    auto dir = scratch("contained");
    fs::path out = dir / "out";
    ASSERT_EQ(run("cornu --n-points 2001 --out " + out.string()), 0);
    std::size_t outside = 0;
    for (const auto &e : fs::directory_iterator(dir)) {
        outside += e.path() != out;
    }
    EXPECT_EQ(outside, 0u);
    EXPECT_TRUE(fs::exists(out / "spiral.csv"));
    EXPECT_TRUE(fs::exists(out / "cornu.json"));
}

TEST(Cli, kebab_case_flags) {
    EXPECT_EQ(kebab("alpha_grid"), "alpha-grid");
    EXPECT_EQ(kebab("beta"), "beta");
}

TEST(Cli, every_command_has_defaults_for_its_angles) {
    for (const auto &c : commands()) {
        for (const auto &key : c.angle_keys) {
            EXPECT_TRUE(c.defaults.contains(key)) << c.name << ' ' << key;
        }
        EXPECT_EQ(find_command(c.name), &c);
    }
    EXPECT_EQ(find_command("nope"), nullptr);
}

}  // namespace
}  // namespace pathsum::cli
