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
#include "pathsum/suite.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pathsum/bell.h"
#include "pathsum/entanglement.h"
#include "pathsum/errors.h"
#include "pathsum/export.h"
#include "pathsum/parallel.h"
#include "pathsum/propagator.h"
#include "pathsum/rng.h"
#include "pathsum/shadow_stream.h"

namespace pathsum {

bool Check::passed() const {
    switch (kind) {
        case CheckKind::Below:
            return measured < bound;
        case CheckKind::AtMost:
            return measured <= bound;
        case CheckKind::AtLeast:
            return measured >= bound;
        case CheckKind::Above:
            return measured > bound;
        case CheckKind::Equal:
            return measured == bound;
    }
    return false;
}

bool CriterionResult::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed(); });
}

std::vector<std::uint64_t> SuiteOptions::standard_seeds() {
    std::vector<std::uint64_t> seeds(20);
    for (std::size_t k = 0; k < seeds.size(); k++) {
        seeds[k] = k + 1;
    }
    return seeds;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const char *symbol(CheckKind kind) {
    switch (kind) {
        case CheckKind::Below:
            return "<";
        case CheckKind::AtMost:
            return "<=";
        case CheckKind::AtLeast:
            return ">=";
        case CheckKind::Above:
            return ">";
        case CheckKind::Equal:
            return "==";
    }
    return "?";
}

double rel_error(Amplitude got, Amplitude want) {
    return std::abs(got - want) / std::abs(want);
}

CriterionResult interferometer_curve() {
    CriterionResult r{1, "interferometer_curve", {}, {}};
    const double beta = 0.37;
    double worst = 0.0;
    for (double d : angle_grid(25)) {
        auto joint = interferometer_joint(InterferometerSetting::congruent(beta + d, beta));
        double c = std::cos(0.5 * d);
        worst = std::max(worst, std::abs(joint.p[0][0] - 0.5 * c * c));
    }
    auto equal = interferometer_joint(InterferometerSetting::congruent(beta, beta));
    r.checks = {{"max_abs_error_p_uu", worst, 1e-9, CheckKind::Below},
                {"equal_settings_p_uu_minus_half", std::abs(equal.p[0][0] - 0.5), 1e-9, CheckKind::Below},
                {"equal_settings_p_ud", equal.p[0][1], 1e-9, CheckKind::Below}};
    return r;
}

CriterionResult congruent_factorization() {
    CriterionResult r{2, "congruent_factorization", {}, {}};
    auto grid = angle_grid(25);
    auto exact = congruence_factorization_residual(
        [](double a, double b) { return InterferometerSetting::congruent(a, b); }, grid, grid);
    const double delta = 0.1;
    auto broken = congruence_factorization_residual(
        [delta](double a, double b) {
            auto s = InterferometerSetting::congruent(a, b);
            s.amplitudes.c_b += delta;
            return s;
        },
        grid, grid);
    r.checks = {{"congruent_residual", exact.residual, 1e-9, CheckKind::Below},
                {"perturbed_residual", broken.residual, delta / 10.0, CheckKind::AtLeast}};
    r.diagnostics = {{"proportionality_re", exact.proportionality.real()},
                     {"proportionality_im", exact.proportionality.imag()}};
    return r;
}

CriterionResult no_signaling(const SuiteOptions &options) {
    CriterionResult r{3, "no_signaling", {}, {}};
    auto grid = angle_grid(25);
    double analytic = no_signaling_audit(interferometer_grid(grid, grid));

    // Empirical marginals against the setting-independent value 1/2, in binomial sigmas.
    const double n = static_cast<double>(options.n_trials);
    const double sigma = std::sqrt(0.25 / n);
    double worst_sigmas = 0.0;
    auto coarse = angle_grid(5);
    for (double a : coarse) {
        for (double b : coarse) {
            StreamConfig config;
            config.experiment = InterferometerExperiment{a, b};
            config.n_trials = options.n_trials;
            config.seed = options.seeds.front();
            auto counts = run_stream(config).report.counts;
            double left_u = static_cast<double>(counts[0] + counts[1]) / n;
            double right_u = static_cast<double>(counts[0] + counts[2]) / n;
            worst_sigmas = std::max({worst_sigmas, std::abs(left_u - 0.5) / sigma, std::abs(right_u - 0.5) / sigma});
        }
    }
    r.checks = {{"analytic_max_marginal_deviation", analytic, 1e-12, CheckKind::Below},
                {"monte_carlo_max_marginal_deviation_sigmas", worst_sigmas, 4.0, CheckKind::Below}};
    return r;
}

CriterionResult ring_poisson() {
    CriterionResult r{4, "ring_winding_vs_spectral", {}, {}};
    const double theta = 0.3;
    auto max_error = [&](std::int64_t cutoff) {
        RingParams params{1.0, kTwoPi, cutoff, cutoff, 0.01};
        double worst = 0.0;
        for (double d : angle_grid(8)) {
            double alpha = std::fmod(theta + d, kTwoPi);
            worst = std::max(worst, std::abs(ring_propagator(alpha, theta, params).value -
                                             ring_propagator_spectral(alpha, theta, params)));
        }
        return worst;
    };
    std::vector<double> errors;
    for (std::int64_t cutoff : {5, 10, 20, 40}) {
        errors.push_back(max_error(cutoff));
    }
    double max_increase = -kInf;
    for (std::size_t k = 1; k < errors.size(); k++) {
        max_increase = std::max(max_increase, errors[k] - errors[k - 1]);
    }
    r.checks = {{"max_abs_diff_at_40_40", errors.back(), 1e-6, CheckKind::Below},
                {"max_error_increase_on_doubling", max_increase, 0.0, CheckKind::AtMost}};
    r.diagnostics = {{"damping", 0.01}, {"errors_at_cutoffs_5_10_20_40", errors}};
    return r;
}

CriterionResult entangled_rings(const SuiteOptions &options) {
    CriterionResult r{5, "entangled_ring_factorization", {}, {}};
    CounterRng rng(options.seeds.front(), 5);
    std::vector<std::array<double, 3>> triples;
    while (triples.size() < 10) {
        std::array<double, 3> t{kPi * rng.uniform(), kPi * rng.uniform(), kPi * rng.uniform()};
        std::sort(t.begin(), t.end());
        triples.push_back(t);  // theta <= beta <= alpha < pi
    }
    double worst = 0.0;
    nlohmann::json full = nlohmann::json::array();
    for (const auto &[theta, beta, alpha] : triples) {
        for (std::int64_t p = -5; p <= 5; p++) {
            RingPairSetting s{theta, alpha, beta, RingParams{}, FixedMomentum{p}};
            auto amp = entangled_ring_amplitude(s);
            worst = std::max(worst, std::abs(amp.factor - std::polar(1.0, static_cast<double>(p) * (alpha - beta))));
        }
        RingPairSetting s{theta, alpha, beta, RingParams{}, FullPropagator{}};
        full.push_back(factorization_json(entangled_ring_amplitude(s)));
    }
    r.checks = {{"fixed_momentum_max_abs_error", worst, 1e-12, CheckKind::Below}};
    r.diagnostics = {{"full_propagator", full}};
    return r;
}

CriterionResult chsh_gap() {
    CriterionResult r{6, "chsh_gap", {}, {}};
    double s = chsh_value(singlet_spin_correlation, 0.0, kPi / 2.0, kPi / 4.0, 3.0 * kPi / 4.0);
    auto lhv = lhv_exhaustive_max(2, 2, chsh_table());
    r.checks = {{"abs_S_minus_2sqrt2", std::abs(std::abs(s) - 2.0 * std::numbers::sqrt2), 1e-9, CheckKind::Below},
                {"lhv_max", lhv.max_value, 2.0, CheckKind::Equal},
                {"lhv_strategies_enumerated", static_cast<double>(lhv.n_strategies), 16.0, CheckKind::Equal},
                {"gap", std::abs(s) - lhv.max_value, 0.8, CheckKind::Above}};
    r.diagnostics = {{"chsh_quantum", s}, {"lhv_argmax_count", lhv.argmax.size()}};
    return r;
}

CriterionResult ghz_mermin() {
    CriterionResult r{7, "ghz_mermin", {}, {}};
    auto products = ghz_quantum_products();
    const std::map<std::string, double> expected{{"xyy", 1.0}, {"yxy", 1.0}, {"yyx", 1.0}, {"xxx", -1.0}};
    double worst = 0.0;
    for (const auto &[label, want] : expected) {
        worst = std::max(worst, std::abs(products.at(label) - want));
    }
    auto mermin = mermin_assignment_search();
    r.checks = {{"max_abs_product_error", worst, 1e-12, CheckKind::Below},
                {"assignments_matching_quantum", static_cast<double>(mermin.quantum_pattern_matches), 0.0,
                 CheckKind::Equal},
                {"assignments_checked", static_cast<double>(mermin.n_assignments), 64.0, CheckKind::Equal},
                {"forcing_identity_holds", mermin.forcing_identity_holds ? 1.0 : 0.0, 1.0, CheckKind::Equal}};
    r.diagnostics = {{"ghz_products", products}};
    return r;
}

CriterionResult singlet_anticorrelation() {
    CriterionResult r{8, "singlet_anticorrelation", {}, {}};
    double equal_worst = 0.0, oracle_worst = 0.0;
    const double beta = 0.7;
    for (double a : angle_grid(25)) {
        equal_worst = std::max(equal_worst, std::abs(singlet_correlation_state_vector(a, a) + 1.0));
        oracle_worst = std::max(oracle_worst, std::abs(singlet_correlation_closed_form(a, beta) -
                                                       singlet_correlation_state_vector(a, beta)));
    }
    r.checks = {{"equal_angle_max_abs_error", equal_worst, 1e-12, CheckKind::Below},
                {"closed_form_vs_state_vector", oracle_worst, 1e-12, CheckKind::Below}};
    return r;
}

CriterionResult free_propagator() {
    CriterionResult r{9, "free_propagator_sliced", {}, {}};
    const double mass = 1.0, t = 1.0;
    FreeSliceOptions options;  // n_slices 4, spacing 0.02, half-width 14, taper 6
    options.check_window = false;
    double worst = 0.0;
    for (double d : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        auto k = free_propagator_sliced(0.0, d, t, mass, options);
        worst = std::max(worst, rel_error(k.value, free_kernel(0.0, d, t, mass)));
    }
    FreeSliceOptions half;
    half.n_slices = 2;
    half.check_window = false;
    double ck_worst = 0.0;
    for (double d : {0.0, 1.0, 2.0}) {
        Amplitude composed = chapman_kolmogorov(0.0, d, t, mass, LatticeSpec::window(14.0, 0.02, 6.0), half);
        ck_worst = std::max(ck_worst, rel_error(composed, free_kernel(0.0, d, t, mass)));
    }
    r.checks = {{"max_rel_error_vs_analytic", worst, 1e-3, CheckKind::Below},
                {"chapman_kolmogorov_max_rel_error", ck_worst, 1e-3, CheckKind::Below}};
    r.diagnostics = {{"n_slices", options.n_slices},
                     {"spacing", options.lattice.spacing},
                     {"half_width", options.lattice.half_extent()},
                     {"taper_width", options.lattice.taper_width}};
    return r;
}

CriterionResult cornu_spiral() {
    CriterionResult r{10, "cornu_stationary_phase", {}, {}};
    auto result = mirror_amplitude(MirrorGeometry{}, 20001, 20.0, 1.0);
    double unit_dev = 0.0;
    for (std::size_t k = 0; k < result.trace.partial_sums.size(); k++) {
        unit_dev = std::max(unit_dev, std::abs(std::abs(result.trace.term(k)) - 1.0));
    }
    double ratio = std::abs(stationary_zone_sum(result.trace)) / std::abs(result.total);
    auto shape = spiral_shape(result.trace);
    r.checks = {{"max_unit_modulus_deviation", unit_dev, 1e-12, CheckKind::Below},
                {"central_zone_fraction", ratio, 0.9, CheckKind::AtLeast},
                {"double_spiral", shape.is_double_spiral() ? 1.0 : 0.0, 1.0, CheckKind::Equal}};
    r.diagnostics = {{"left_turn_sign", shape.left_turn_sign},
                     {"right_turn_sign", shape.right_turn_sign},
                     {"left_turning_rad", shape.left_turning},
                     {"right_turning_rad", shape.right_turning}};
    return r;
}

CriterionResult monte_carlo(const SuiteOptions &options) {
    CriterionResult r{11, "monte_carlo_convergence", {}, {}};
    const std::vector<Experiment> experiments{TwoDetector{}, InterferometerExperiment{0.0, 0.0},
                                              InterferometerExperiment{1.1, 0.4}, RingMomentum{}};
    double worst_z = 0.0;
    for (const auto &experiment : experiments) {
        for (std::uint64_t seed : options.seeds) {
            StreamConfig config;
            config.experiment = experiment;
            config.n_trials = options.n_trials;
            config.seed = seed;
            worst_z = std::max(worst_z, run_stream(config).report.max_abs_z());
        }
    }

    StreamConfig config;
    config.experiment = InterferometerExperiment{1.1, 0.4};
    config.n_trials = options.n_trials;
    config.seed = options.seeds.front();
    auto first = run_stream(config).records;
    auto second = run_stream(config).records;
    unsigned saved = max_threads();
    set_max_threads(1);
    auto serial = run_stream(config).records;
    set_max_threads(saved);
    bool identical = first == second && first == serial;

    r.checks = {{"max_abs_z", worst_z, 4.0, CheckKind::AtMost},
                {"identical_seed_bit_identical", identical ? 1.0 : 0.0, 1.0, CheckKind::Equal}};
    r.diagnostics = {{"seeds", options.seeds.size()}, {"n_trials", options.n_trials}};
    return r;
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions &options) {
    CriterionResult r;
    switch (id) {
        case 1:
            r = interferometer_curve();
            break;
        case 2:
            r = congruent_factorization();
            break;
        case 3:
            r = no_signaling(options);
            break;
        case 4:
            r = ring_poisson();
            break;
        case 5:
            r = entangled_rings(options);
            break;
        case 6:
            r = chsh_gap();
            break;
        case 7:
            r = ghz_mermin();
            break;
        case 8:
            r = singlet_anticorrelation();
            break;
        case 9:
            r = free_propagator();
            break;
        case 10:
            r = cornu_spiral();
            break;
        case 11:
            r = monte_carlo(options);
            break;
        default:
            throw DomainError("run_criterion: no criterion " + std::to_string(id));
    }
    if (options.tamper_criterion == id && !r.checks.empty()) {
        Check &c = r.checks.front();
        switch (c.kind) {
            case CheckKind::Below:
            case CheckKind::AtMost:
                c.bound = -kInf;
                break;
            case CheckKind::AtLeast:
            case CheckKind::Above:
                c.bound = kInf;
                break;
            case CheckKind::Equal:
                c.bound = c.measured + 1.0;
                break;
        }
    }
    return r;
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions &options) {
    std::vector<CriterionResult> results;
    for (int id = 1; id <= kCriterionCount; id++) {
        results.push_back(run_criterion(id, options));
    }
    return results;
}

std::string format_criterion_line(const CriterionResult &result) {
    std::ostringstream out;
    out << (result.passed() ? "[PASS] " : "[FAIL] ") << result.id << ' ' << result.name << ':';
    for (std::size_t k = 0; k < result.checks.size(); k++) {
        const Check &c = result.checks[k];
        out << (k ? "; " : " ") << c.name << '=' << format_double(c.measured) << ' ' << symbol(c.kind) << ' '
            << format_double(c.bound) << (c.passed() ? "" : " (violated)");
    }
    return out.str();
}

nlohmann::json suite_summary(const std::vector<CriterionResult> &results) {
    nlohmann::json criteria = nlohmann::json::array();
    bool all = true;
    for (const auto &r : results) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto &c : r.checks) {
            checks.push_back({{"name", c.name},
                              {"measured", c.measured},
                              {"comparison", symbol(c.kind)},
                              {"bound", format_double(c.bound)},
                              {"passed", c.passed()}});
        }
        criteria.push_back({{"id", r.id},
                            {"name", r.name},
                            {"passed", r.passed()},
                            {"checks", checks},
                            {"diagnostics", r.diagnostics}});
        all = all && r.passed();
    }
    return {{"all_passed", all}, {"criteria", criteria}};
}

}  // namespace pathsum
