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

#include "commands.h"

#include <cmath>
#include <cstdlib>
#include <fstream>

#include "pathsum/bell.h"
#include "pathsum/entanglement.h"
#include "pathsum/errors.h"
#include "pathsum/export.h"
#include "pathsum/propagator.h"
#include "pathsum/shadow_stream.h"
#include "pathsum/suite.h"

namespace pathsum::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::ofstream open_output(const fs::path &out_dir, const std::string &name) {
    std::ofstream out(out_dir / name, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + (out_dir / name).string() + " for writing");
    }
    return out;
}

void write_json(const fs::path &out_dir, const std::string &name, const json &value) {
    open_output(out_dir, name) << value.dump(2) << '\n';
}

json amplitude_json(Amplitude a) {
    return {{"re", a.real()}, {"im", a.imag()}};
}

std::size_t positive_count(const json &config, const char *key) {
    auto v = config.at(key).get<std::int64_t>();
    if (v < 1) {
        throw DomainError(std::string(key) + " must be >= 1");
    }
    return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------------------------------

CommandOutput run_cornu(const json &c, const fs::path &out) {
    MirrorGeometry g{c.at("source_x"), c.at("source_y"), c.at("receiver_x"),
                     c.at("receiver_y"), c.at("mirror_left"), c.at("mirror_right")};
    auto result = mirror_amplitude(g, positive_count(c, "n_points"), c.at("mass"), c.at("t_total"));
    auto shape = spiral_shape(result.trace);
    {
        auto csv = open_output(out, "spiral.csv");
        write_spiral_csv(csv, result.trace);
    }
    Amplitude zone = stationary_zone_sum(result.trace);
    write_json(out, "cornu.json",
               {{"total", amplitude_json(result.total)},
                {"total_times_spacing", amplitude_json(result.total * result.spacing)},
                {"stationary_index", stationary_index(result.trace)},
                {"central_zone_fraction", std::abs(zone) / std::abs(result.total)},
                {"double_spiral", shape.is_double_spiral()},
                {"left_turn_sign", shape.left_turn_sign},
                {"right_turn_sign", shape.right_turn_sign}});
    return {{"spiral.csv", "cornu.json"}};
}

CommandOutput run_free(const json &c, const fs::path &out) {
    FreeSliceOptions options;
    options.n_slices = positive_count(c, "n_slices");
    options.lattice = LatticeSpec::window(c.at("half_width"), c.at("spacing"), c.at("taper_width"));
    options.enumeration_cap = c.at("enumeration_cap").get<std::uint64_t>();
    const std::string method = c.at("method");
    if (method == "transfer") {
        options.method = SumMethod::TransferMatrix;
    } else if (method == "enumeration") {
        options.method = SumMethod::Enumeration;
    } else {
        throw DomainError("method must be 'transfer' or 'enumeration', got '" + method + "'");
    }
    const double x1 = c.at("x1"), x2 = c.at("x2"), t = c.at("t_total"), m = c.at("mass");
    auto sliced = free_propagator_sliced(x1, x2, t, m, options);
    Amplitude exact = free_kernel(x1, x2, t, m);
    write_json(out, "free.json",
               {{"value", amplitude_json(sliced.value)},
                {"analytic", amplitude_json(exact)},
                {"rel_error", std::abs(sliced.value - exact) / std::abs(exact)},
                {"n_paths", sliced.n_paths},
                {"boundary_estimate", sliced.boundary_estimate},
                {"window_warning", sliced.window_warning}});
    return {{"free.json"}};
}

RingParams ring_params(const json &c) {
    return RingParams{c.at("moment"), c.at("t_total"), c.at("n_cutoff"), c.at("m_cutoff"), c.at("damping")};
}

CommandOutput run_ring(const json &c, const fs::path &out) {
    RingParams params = ring_params(c);
    const double theta = c.at("theta");
    auto csv = open_output(out, "ring.csv");
    csv << "alpha,theta,winding_re,winding_im,spectral_re,spectral_im,abs_diff\n";
    double worst = 0.0;
    bool warning = false;
    for (double d : angle_grid(positive_count(c, "grid"))) {
        double alpha = std::fmod(theta + d, kTwoPi);
        auto k = ring_propagator(alpha, theta, params);
        Amplitude s = ring_propagator_spectral(alpha, theta, params);
        double diff = std::abs(k.value - s);
        worst = std::max(worst, diff);
        warning = warning || k.truncation_warning;
        csv << format_double(alpha) << ',' << format_double(theta) << ',' << format_double(k.value.real()) << ','
            << format_double(k.value.imag()) << ',' << format_double(s.real()) << ',' << format_double(s.imag())
            << ',' << format_double(diff) << '\n';
    }
    write_json(out, "ring.json", {{"max_abs_diff", worst}, {"truncation_warning", warning}});
    return {{"ring.csv", "ring.json"}};
}

CommandOutput run_interferometer(const json &c, const fs::path &out) {
    const double beta = c.at("beta");
    std::vector<InterferometerRow> rows;
    for (double alpha : angle_grid(positive_count(c, "alpha_grid"))) {
        rows.push_back({alpha, beta, interferometer_joint(InterferometerSetting::congruent(alpha, beta))});
    }
    {
        auto csv = open_output(out, "interferometer.csv");
        write_interferometer_csv(csv, rows);
    }
    auto grid = angle_grid(positive_count(c, "alpha_grid"));
    auto diag = congruence_factorization_residual(
        [](double a, double b) { return InterferometerSetting::congruent(a, b); }, grid, grid);
    write_json(out, "interferometer.json",
               {{"factorization_residual", diag.residual},
                {"no_signaling_max_deviation", no_signaling_audit(interferometer_grid(grid, grid))}});
    return {{"interferometer.csv", "interferometer.json"}};
}

CommandOutput run_rings(const json &c, const fs::path &out) {
    RingPairSetting s;
    s.theta = c.at("theta");
    s.alpha = c.at("alpha");
    s.beta = c.at("beta");
    s.params = ring_params(c);
    const std::string mode = c.at("mode");
    if (mode == "fixed") {
        s.mode = FixedMomentum{c.at("p").get<std::int64_t>()};
    } else if (mode == "full") {
        s.mode = FullPropagator{};
    } else {
        throw DomainError("mode must be 'fixed' or 'full', got '" + mode + "'");
    }
    auto amp = entangled_ring_amplitude(s);
    json report = factorization_json(amp);
    report["amplitude"] = amplitude_json(amp.amplitude);
    write_json(out, "rings.json", report);
    return {{"rings.json"}};
}

CommandOutput run_spin(const json &c, const fs::path &out) {
    const double beta = c.at("beta");
    std::vector<SpinRow> rows;
    for (double alpha : angle_grid(positive_count(c, "alpha_grid"))) {
        rows.push_back({alpha, beta, singlet_spin_correlation(alpha, beta)});
    }
    auto csv = open_output(out, "spin.csv");
    write_spin_csv(csv, rows);
    return {{"spin.csv"}};
}

CommandOutput run_chsh(const json &c, const fs::path &out) {
    double s = chsh_value(singlet_spin_correlation, c.at("a"), c.at("a_prime"), c.at("b"), c.at("b_prime"));
    auto lhv = lhv_exhaustive_max(2, 2, chsh_table());
    BellReport report = bell_report();
    report.chsh_quantum = std::abs(s);
    json j = bell_report_json(report);
    j["chsh_signed"] = s;
    j["lhv_argmax_count"] = lhv.argmax.size();
    write_json(out, "chsh.json", j);
    return {{"chsh.json"}};
}

CommandOutput run_ghz(const json &, const fs::path &out) {
    auto mermin = mermin_assignment_search();
    json j = bell_report_json(bell_report());
    j["mermin_all_plus_count"] = mermin.all_plus_matches;
    j["forcing_identity_holds"] = mermin.forcing_identity_holds;
    j["pattern_counts"] = mermin.pattern_counts;
    j["state_norm"] = ghz_state_norm();
    write_json(out, "ghz.json", j);
    return {{"ghz.json"}};
}

CommandOutput run_stream_command(const json &c, const fs::path &out) {
    StreamConfig config;
    const std::string experiment = c.at("experiment");
    if (experiment == "two_detector") {
        config.experiment = TwoDetector{};
    } else if (experiment == "interferometer") {
        config.experiment = InterferometerExperiment{c.at("alpha"), c.at("beta")};
    } else if (experiment == "ring_momentum") {
        config.experiment = RingMomentum{};
    } else {
        throw DomainError("experiment must be two_detector, interferometer or ring_momentum");
    }
    config.n_trials = positive_count(c, "n_trials");
    config.seed = c.at("seed").get<std::uint64_t>();
    const std::string generator = c.at("generator");
    if (generator == "fixed_momentum") {
        config.ensemble.generator = Generator::FixedMomentum;
    } else if (generator == "bridge") {
        config.ensemble.generator = Generator::BrownianBridge;
    } else if (generator == "lattice") {
        config.ensemble.generator = Generator::LatticeEnumeration;
    } else {
        throw DomainError("generator must be fixed_momentum, bridge or lattice");
    }
    config.ensemble.n_paths = positive_count(c, "n_paths");
    config.ensemble.n_slices = positive_count(c, "n_slices");
    config.ensemble.options.winding_cutoff = c.at("winding_cutoff");
    const std::string policy = c.at("policy");
    if (policy != "uniform" && policy != "weighted") {
        throw DomainError("policy must be uniform or weighted");
    }
    config.policy = policy == "uniform" ? PathPolicy::Uniform : PathPolicy::AmplitudeWeighted;

    auto result = run_stream(config);
    {
        auto csv = open_output(out, "events.csv");
        write_event_log_csv(csv, result.records, result.model);
    }
    json report = frequency_report_json(result.report);
    json classes = json::object();
    for (const auto &[cls, f] : tangible_class_statistics(result.records)) {
        classes[cls.to_string()] = f;
    }
    report["tangible_classes"] = classes;
    write_json(out, "stream_report.json", report);
    return {{"events.csv", "stream_report.json"}};
}

CommandOutput run_suite(const json &, const fs::path &out) {
    SuiteOptions options;
    if (const char *tamper = std::getenv("PATHSUM_SUITE_TAMPER")) {
        options.tamper_criterion = std::atoi(tamper);
    }
    auto results = run_acceptance_suite(options);
    json summary = suite_summary(results);
    write_json(out, "suite_summary.json", summary);
    return {{"suite_summary.json"}, summary.at("all_passed").get<bool>()};
}

std::vector<Command> build_commands() {
    std::vector<Command> list;
    list.push_back({"cornu", "Mirror reflection amplitude and its Cornu-spiral trace",
                    {{"source_x", -1.0},
                     {"source_y", 1.0},
                     {"receiver_x", 1.0},
                     {"receiver_y", 1.0},
                     {"mirror_left", -3.0},
                     {"mirror_right", 3.0},
                     {"n_points", 20001},
                     {"mass", 20.0},
                     {"t_total", 1.0}},
                    {},
                    run_cornu});
    list.push_back({"free", "Time-sliced lattice free-particle propagator vs the analytic kernel",
                    {{"x1", 0.0},
                     {"x2", 1.0},
                     {"t_total", 1.0},
                     {"mass", 1.0},
                     {"n_slices", 4},
                     {"spacing", 0.02},
                     {"half_width", 14.0},
                     {"taper_width", 6.0},
                     {"method", "transfer"},
                     {"enumeration_cap", 10'000'000}},
                    {},
                    run_free});
    list.push_back({"ring", "Ring propagator: winding-class sum vs spectral expansion",
                    {{"moment", 1.0},
                     {"t_total", kTwoPi},
                     {"n_cutoff", 40},
                     {"m_cutoff", 40},
                     {"damping", 0.01},
                     {"theta", 0.3},
                     {"grid", 8}},
                    {"theta"},
                    run_ring});
    list.push_back({"interferometer", "Two-particle interferometer joint detection curve",
                    {{"alpha_grid", 25}, {"beta", 0.0}},
                    {"beta"},
                    run_interferometer});
    list.push_back({"rings", "Entangled ring particles: pair amplitude and factor f(alpha, beta)",
                    {{"theta", 0.1},
                     {"alpha", 0.9},
                     {"beta", 0.4},
                     {"mode", "fixed"},
                     {"p", 1},
                     {"moment", 1.0},
                     {"t_total", 1.0},
                     {"n_cutoff", 40},
                     {"m_cutoff", 40},
                     {"damping", 0.0}},
                    {"theta", "alpha", "beta"},
                    run_rings});
    list.push_back({"spin", "Singlet spin correlation E(alpha, beta) curve",
                    {{"alpha_grid", 25}, {"beta", 0.0}},
                    {"beta"},
                    run_spin});
    list.push_back({"chsh", "CHSH value: singlet prediction vs exhaustive local strategies",
                    {{"a", 0.0}, {"a_prime", kPi / 2.0}, {"b", kPi / 4.0}, {"b_prime", 3.0 * kPi / 4.0}},
                    {"a", "a_prime", "b", "b_prime"},
                    run_chsh});
    list.push_back({"ghz", "GHZ products and the Mermin element-of-reality search", json::object(), {}, run_ghz});
    list.push_back({"stream", "Shadow-stream Monte Carlo event simulation",
                    {{"experiment", "two_detector"},
                     {"alpha", 0.0},
                     {"beta", 0.0},
                     {"n_trials", 100'000},
                     {"seed", 1},
                     {"generator", "fixed_momentum"},
                     {"n_paths", 100},
                     {"n_slices", 32},
                     {"winding_cutoff", 2},
                     {"policy", "uniform"}},
                    {"alpha", "beta"},
                    run_stream_command});
    list.push_back({"suite", "Run every acceptance criterion and write a pass/fail summary", json::object(), {},
                    run_suite});
    return list;
}

}  // namespace

const std::vector<Command> &commands() {
    static const std::vector<Command> list = build_commands();
    return list;
}

const Command *find_command(const std::string &name) {
    for (const auto &c : commands()) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

}  // namespace pathsum::cli
