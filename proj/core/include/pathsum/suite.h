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
#ifndef PATHSUM_SUITE_H
#define PATHSUM_SUITE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pathsum {

enum class CheckKind { Below, AtMost, AtLeast, Above, Equal };

/// One measured quantity against a pinned bound.
struct Check {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    CheckKind kind = CheckKind::Below;

    bool passed() const;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    std::vector<Check> checks;
    /// Reported values that carry no pass/fail bound.
    nlohmann::json diagnostics = nlohmann::json::object();

    bool passed() const;
};

struct SuiteOptions {
    /// Makes the named criterion's first bound unattainable (failure-path testing).
    std::optional<int> tamper_criterion;
    std::vector<std::uint64_t> seeds = standard_seeds();
    std::uint64_t n_trials = 100'000;

    static std::vector<std::uint64_t> standard_seeds();
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const SuiteOptions &options = {});
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions &options = {});

/// "[PASS] 6 chsh_gap: quantum_minus_2sqrt2=... < 1e-09; ..."
std::string format_criterion_line(const CriterionResult &result);

/// {"all_passed": bool, "criteria": [...]} with no timing fields; byte-stable across runs.
nlohmann::json suite_summary(const std::vector<CriterionResult> &results);

}  // namespace pathsum

#endif
