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
#include "pathsum/export.h"

#include <charconv>

namespace pathsum {

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

void write_spiral_csv(std::ostream &out, const SpiralTrace &trace) {
    out << "index,re,im\n";
    for (std::size_t k = 0; k < trace.partial_sums.size(); k++) {
        out << k << ',' << format_double(trace.partial_sums[k].real()) << ','
            << format_double(trace.partial_sums[k].imag()) << '\n';
    }
}

void write_interferometer_csv(std::ostream &out, std::span<const InterferometerRow> rows) {
    out << "alpha,beta,p_uu,p_ud,p_du,p_dd\n";
    for (const auto &r : rows) {
        out << format_double(r.alpha) << ',' << format_double(r.beta) << ',' << format_double(r.joint.p[0][0])
            << ',' << format_double(r.joint.p[0][1]) << ',' << format_double(r.joint.p[1][0]) << ','
            << format_double(r.joint.p[1][1]) << '\n';
    }
}

void write_spin_csv(std::ostream &out, std::span<const SpinRow> rows) {
    out << "alpha,beta,E\n";
    for (const auto &r : rows) {
        out << format_double(r.alpha) << ',' << format_double(r.beta) << ',' << format_double(r.e) << '\n';
    }
}

void write_event_log_csv(std::ostream &out, std::span<const EventRecord> records, const OutcomeModel &model) {
    out << "trial,path_id,class,outcome\n";
    for (const auto &r : records) {
        out << r.trial << ',' << r.path_id << ',' << r.homotopy_class.to_string() << ','
            << model.labels.at(r.outcome) << '\n';
    }
}

nlohmann::json factorization_json(const RingPairAmplitude &amp) {
    return {{"f_re", amp.factor.real()}, {"f_im", amp.factor.imag()}, {"residual", amp.residual}};
}

nlohmann::json frequency_report_json(const FrequencyReport &report) {
    nlohmann::json counts = nlohmann::json::object();
    nlohmann::json predicted = nlohmann::json::object();
    nlohmann::json z = nlohmann::json::object();
    for (std::size_t k = 0; k < report.outcomes.size(); k++) {
        counts[report.outcomes[k]] = report.counts[k];
        predicted[report.outcomes[k]] = report.predicted[k];
        z[report.outcomes[k]] = report.z_scores[k];
    }
    return {{"n_trials", report.n_trials},
            {"counts", counts},
            {"predicted", predicted},
            {"z_scores", z},
            {"max_abs_z", report.max_abs_z()},
            {"max_abs_error", report.max_abs_error()}};
}

nlohmann::json bell_report_json(const BellReport &report) {
    return {{"chsh_quantum", report.chsh_quantum},
            {"chsh_lhv_max", report.chsh_lhv_max},
            {"ghz_products", report.ghz_products},
            {"mermin_match_count", report.mermin_match_count},
            {"no_signaling_max_deviation", report.no_signaling_max_deviation}};
}

}  // namespace pathsum
