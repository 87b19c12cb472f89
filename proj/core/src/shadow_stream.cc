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
#include "pathsum/shadow_stream.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pathsum/entanglement.h"
#include "pathsum/errors.h"
#include "pathsum/parallel.h"
#include "pathsum/rng.h"

namespace pathsum {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::vector<double> normalized(const std::vector<double> &weights, const char *what) {
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw DomainError(std::string("run_stream: ") + what + " is degenerate (all-zero amplitude)");
    }
    std::vector<double> p(weights.size());
    for (std::size_t k = 0; k < p.size(); k++) {
        p[k] = weights[k] / total;
    }
    return p;
}

std::vector<double> cumulative(const std::vector<double> &p) {
    std::vector<double> cdf(p.size());
    std::partial_sum(p.begin(), p.end(), cdf.begin());
    return cdf;
}

// Smallest k with u < cdf[k], restricted to outcomes of positive probability.
std::size_t inverse_cdf(const std::vector<double> &cdf, const std::vector<double> &p, double u) {
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t k = it == cdf.end() ? cdf.size() - 1 : static_cast<std::size_t>(it - cdf.begin());
    while (k > 0 && p[k] == 0.0) {
        k--;
    }
    return k;
}

}  // namespace

std::string experiment_name(const Experiment &experiment) {
    return std::visit(overloaded{[](const TwoDetector &) { return std::string("two_detector"); },
                                 [](const InterferometerExperiment &) { return std::string("interferometer"); },
                                 [](const RingMomentum &) { return std::string("ring_momentum"); }},
                      experiment);
}

OutcomeModel outcome_model(const Experiment &experiment) {
    OutcomeModel model;
    std::vector<double> weights;
    std::visit(overloaded{
                   [&](const TwoDetector &e) {
                       if (e.first.empty()) {
                           throw DomainError("TwoDetector: no detector amplitudes");
                       }
                       if (e.second.empty()) {
                           for (std::size_t i = 0; i < e.first.size(); i++) {
                               model.labels.push_back("d" + std::to_string(i));
                               weights.push_back(std::norm(e.first[i]));
                           }
                           return;
                       }
                       for (std::size_t i = 0; i < e.first.size(); i++) {
                           for (std::size_t j = 0; j < e.second.size(); j++) {
                               model.labels.push_back("d" + std::to_string(i) + ":d" + std::to_string(j));
                               weights.push_back(std::norm(e.first[i] * e.second[j]));
                           }
                       }
                   },
                   [&](const InterferometerExperiment &e) {
                       auto joint = interferometer_joint(InterferometerSetting::congruent(e.alpha, e.beta));
                       model.labels = {"uu'", "ud'", "du'", "dd'"};
                       weights = {joint.p[0][0], joint.p[0][1], joint.p[1][0], joint.p[1][1]};
                   },
                   [&](const RingMomentum &e) {
                       if (e.detector_angles.empty()) {
                           throw DomainError("RingMomentum: no detector angles");
                       }
                       for (std::size_t j = 0; j < e.detector_angles.size(); j++) {
                           model.labels.push_back("a" + std::to_string(j));
                           weights.push_back(std::norm(ring_propagator(e.detector_angles[j], e.theta, e.params).value));
                       }
                   }},
               experiment);
    model.probabilities = normalized(weights, "outcome distribution");
    return model;
}

double FrequencyReport::max_abs_z() const {
    double worst = 0.0;
    for (double z : z_scores) {
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

double FrequencyReport::max_abs_error() const {
    double worst = 0.0;
    for (std::size_t k = 0; k < counts.size(); k++) {
        worst = std::max(worst, std::abs(static_cast<double>(counts[k]) / static_cast<double>(n_trials) - predicted[k]));
    }
    return worst;
}

FrequencyReport frequency_report(std::span<const EventRecord> records, const OutcomeModel &model) {
    FrequencyReport report;
    report.outcomes = model.labels;
    report.predicted = model.probabilities;
    report.counts.assign(model.labels.size(), 0);
    report.n_trials = records.size();
    for (const auto &r : records) {
        report.counts.at(r.outcome)++;
    }
    const double n = static_cast<double>(report.n_trials);
    for (std::size_t k = 0; k < report.counts.size(); k++) {
        double p = report.predicted[k];
        double excess = static_cast<double>(report.counts[k]) - n * p;
        double var = n * p * (1.0 - p);
        if (var > 0.0) {
            report.z_scores.push_back(excess / std::sqrt(var));
        } else {
            report.z_scores.push_back(excess == 0.0 ? 0.0 : std::copysign(INFINITY, excess));
        }
    }
    return report;
}

StreamResult run_stream(const StreamConfig &config) {
    const EnsembleSpec &spec = config.ensemble;
    PathEnsemble ensemble = sample_paths(spec.space, spec.endpoints, spec.n_slices, spec.n_paths,
                                         spec.generator, config.seed, spec.options);
    return run_stream(config, ensemble);
}

StreamResult run_stream(const StreamConfig &config, const PathEnsemble &ensemble) {
    if (config.n_trials < 1) {
        throw DomainError("run_stream: n_trials must be >= 1");
    }
    StreamResult result;
    result.model = outcome_model(config.experiment);
    const auto &p_out = result.model.probabilities;
    const auto cdf_out = cumulative(p_out);

    std::vector<double> path_w(ensemble.size());
    for (std::size_t i = 0; i < ensemble.size(); i++) {
        path_w[i] = config.policy == PathPolicy::Uniform ? 1.0 : ensemble.weight(i);
    }
    const auto p_path = normalized(path_w, "path weights");
    const auto cdf_path = cumulative(p_path);
    std::vector<HomotopyClass> classes;
    classes.reserve(ensemble.size());
    for (const auto &path : ensemble.paths()) {
        classes.push_back(classify(path));
    }

    result.records.resize(config.n_trials);
    parallel_for(config.n_trials, 4096, [&](std::size_t t0, std::size_t t1) {
        for (std::size_t t = t0; t < t1; t++) {
            CounterRng rng(config.seed, t);
            double u_path = static_cast<double>(rng.at(0) >> 11) * 0x1.0p-53;
            double u_outcome = static_cast<double>(rng.at(1) >> 11) * 0x1.0p-53;
            std::size_t path_id = config.policy == PathPolicy::Uniform
                                      ? std::min(ensemble.size() - 1,
                                                 static_cast<std::size_t>(u_path * static_cast<double>(ensemble.size())))
                                      : inverse_cdf(cdf_path, p_path, u_path);
            result.records[t] = EventRecord{t, path_id, classes[path_id], inverse_cdf(cdf_out, p_out, u_outcome)};
        }
    });
    result.report = frequency_report(result.records, result.model);
    return result;
}

std::map<HomotopyClass, double> tangible_class_statistics(std::span<const EventRecord> records) {
    if (records.empty()) {
        throw DomainError("tangible_class_statistics: no records");
    }
    std::map<HomotopyClass, std::uint64_t> counts;
    for (const auto &r : records) {
        counts[r.homotopy_class]++;
    }
    std::map<HomotopyClass, double> freq;
    for (const auto &[cls, c] : counts) {
        freq.emplace(cls, static_cast<double>(c) / static_cast<double>(records.size()));
    }
    return freq;
}

std::map<HomotopyClass, double> ensemble_class_composition(const PathEnsemble &ensemble, PathPolicy policy) {
    std::map<HomotopyClass, double> comp;
    double total = 0.0;
    for (std::size_t i = 0; i < ensemble.size(); i++) {
        double w = policy == PathPolicy::Uniform ? 1.0 : ensemble.weight(i);
        comp[classify(ensemble.paths()[i])] += w;
        total += w;
    }
    for (auto &[cls, w] : comp) {
        w /= total;
    }
    return comp;
}

double path_chi_square(std::span<const EventRecord> records, std::size_t n_paths) {
    if (records.empty() || n_paths == 0) {
        throw DomainError("path_chi_square: empty input");
    }
    std::vector<std::uint64_t> counts(n_paths, 0);
    for (const auto &r : records) {
        counts.at(r.path_id)++;
    }
    double expected = static_cast<double>(records.size()) / static_cast<double>(n_paths);
    double chi2 = 0.0;
    for (auto c : counts) {
        double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
    }
    return chi2;
}

std::vector<ConvergenceRow> convergence_scan(const StreamConfig &config,
                                             const std::vector<std::uint64_t> &trial_counts) {
    std::vector<ConvergenceRow> rows;
    for (std::size_t k = 0; k < trial_counts.size(); k++) {
        if (k > 0 && trial_counts[k] <= trial_counts[k - 1]) {
            throw DomainError("convergence_scan: trial counts must increase");
        }
        StreamConfig c = config;
        c.n_trials = trial_counts[k];
        auto result = run_stream(c);
        double err = result.report.max_abs_error();
        rows.push_back({c.n_trials, err, std::sqrt(static_cast<double>(c.n_trials)) * err});
    }
    return rows;
}

}  // namespace pathsum
