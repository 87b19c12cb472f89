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
#ifndef PATHSUM_SHADOW_STREAM_H
#define PATHSUM_SHADOW_STREAM_H

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pathsum/amplitude.h"
#include "pathsum/path.h"
#include "pathsum/propagator.h"

namespace pathsum {

/// One tangible whose amplitude at each detector is given; with a second tangible the
/// joint amplitudes are the NIP products first[i] * second[j].
struct TwoDetector {
    std::vector<Amplitude> first{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
    std::vector<Amplitude> second;
};

/// Congruent two-particle interferometer; outcomes are the four detector pairs.
struct InterferometerExperiment {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Ring tangible from theta to detectors at the given angles, P(j) ~ |K(angle_j, theta)|^2.
struct RingMomentum {
    RingParams params{1.0, 1.0, 40, 40, 0.01};
    double theta = 0.3;
    std::vector<double> detector_angles{0.3, 1.3, 2.3, 3.3, 4.3, 5.3};
};

using Experiment = std::variant<TwoDetector, InterferometerExperiment, RingMomentum>;

std::string experiment_name(const Experiment &experiment);

/// How the tangible picks its path from the shadow stream.
enum class PathPolicy {
    Uniform,
    /// Proportional to the ensemble's per-path weights.
    AmplitudeWeighted,
};

/// Recipe for the shadow stream ensemble (passed to sample_paths with the stream seed).
struct EnsembleSpec {
    Space space = Space::Ring;
    Endpoints endpoints{0.3, 1.0};
    std::size_t n_slices = 32;
    std::size_t n_paths = 100;
    Generator generator = Generator::FixedMomentum;
    SamplerOptions options{};
};

struct StreamConfig {
    Experiment experiment = TwoDetector{};
    std::uint64_t n_trials = 100'000;
    std::uint64_t seed = 1;
    EnsembleSpec ensemble{};
    PathPolicy policy = PathPolicy::Uniform;
};

struct EventRecord {
    std::uint64_t trial = 0;
    std::size_t path_id = 0;
    HomotopyClass homotopy_class = HomotopyClass::winding(0);
    std::size_t outcome = 0;

    friend bool operator==(const EventRecord &, const EventRecord &) = default;
};

/// Outcome labels and their analytic probabilities.
struct OutcomeModel {
    std::vector<std::string> labels;
    std::vector<double> probabilities;
};

OutcomeModel outcome_model(const Experiment &experiment);

struct FrequencyReport {
    std::vector<std::string> outcomes;
    std::vector<std::uint64_t> counts;
    std::vector<double> predicted;
    /// Binomial z-score (count - N p) / sqrt(N p (1 - p)) per outcome.
    std::vector<double> z_scores;
    std::uint64_t n_trials = 0;

    double max_abs_z() const;
    /// max |count / N - p| over outcomes.
    double max_abs_error() const;
};

struct StreamResult {
    std::vector<EventRecord> records;
    FrequencyReport report;
    OutcomeModel model;
};

/// Per trial: draw the tangible's path from the ensemble (RPP), draw the outcome from the
/// analytic distribution, emit the record. Deterministic in config.seed at any thread count.
StreamResult run_stream(const StreamConfig &config);
/// Same, with an explicitly supplied shadow stream instead of config.ensemble.
StreamResult run_stream(const StreamConfig &config, const PathEnsemble &ensemble);

FrequencyReport frequency_report(std::span<const EventRecord> records, const OutcomeModel &model);

/// Empirical distribution of the tangible's homotopy class.
std::map<HomotopyClass, double> tangible_class_statistics(std::span<const EventRecord> records);

/// Class composition the tangible should reproduce under the given policy.
std::map<HomotopyClass, double> ensemble_class_composition(const PathEnsemble &ensemble, PathPolicy policy);

/// Pearson chi-square of path_id counts against the uniform law over n_paths.
double path_chi_square(std::span<const EventRecord> records, std::size_t n_paths);

struct ConvergenceRow {
    std::uint64_t n_trials = 0;
    double max_abs_error = 0.0;
    /// sqrt(N) * max_abs_error.
    double scaled_error = 0.0;
};

/// One run per entry of trial_counts (strictly increasing) with the config's seed.
std::vector<ConvergenceRow> convergence_scan(const StreamConfig &config,
                                             const std::vector<std::uint64_t> &trial_counts);

}  // namespace pathsum

#endif
