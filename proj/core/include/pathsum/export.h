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
#ifndef PATHSUM_EXPORT_H
#define PATHSUM_EXPORT_H

#include <ostream>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "pathsum/bell.h"
#include "pathsum/entanglement.h"
#include "pathsum/propagator.h"
#include "pathsum/shadow_stream.h"

namespace pathsum {

/// Shortest decimal text that round-trips the double ('.' separator, locale-independent).
std::string format_double(double v);

/// index,re,im
void write_spiral_csv(std::ostream &out, const SpiralTrace &trace);

struct InterferometerRow {
    double alpha;
    double beta;
    JointDistribution joint;
};
/// alpha,beta,p_uu,p_ud,p_du,p_dd
void write_interferometer_csv(std::ostream &out, std::span<const InterferometerRow> rows);

struct SpinRow {
    double alpha;
    double beta;
    double e;
};
/// alpha,beta,E
void write_spin_csv(std::ostream &out, std::span<const SpinRow> rows);

/// trial,path_id,class,outcome
void write_event_log_csv(std::ostream &out, std::span<const EventRecord> records, const OutcomeModel &model);

/// {f_re, f_im, residual}
nlohmann::json factorization_json(const RingPairAmplitude &amp);
nlohmann::json frequency_report_json(const FrequencyReport &report);
nlohmann::json bell_report_json(const BellReport &report);

}  // namespace pathsum

#endif
