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
#include "pathsum/bell.h"

#include <algorithm>
#include <cmath>

#include "pathsum/errors.h"

namespace pathsum {

double chsh_value(const Correlation &e, double a, double a_prime, double b, double b_prime) {
    auto checked = [&](double x, double y) {
        double v = e(x, y);
        if (!std::isfinite(v) || std::abs(v) > 1.0 + 1e-12) {
            throw DomainError("chsh_value: correlation " + std::to_string(v) + " outside [-1, 1]");
        }
        return v;
    };
    return checked(a, b) - checked(a, b_prime) + checked(a_prime, b) + checked(a_prime, b_prime);
}

CoefficientTable chsh_table() {
    return {{1.0, -1.0}, {1.0, 1.0}};
}

LHVMaximum lhv_exhaustive_max(std::size_t n_left, std::size_t n_right, const CoefficientTable &functional) {
    constexpr std::size_t kMaxSettings = 4;
    if (n_left > kMaxSettings || n_right > kMaxSettings) {
        throw ResourceError("lhv_exhaustive_max: too many settings per side", kMaxSettings);
    }
    if (n_left == 0 || n_right == 0) {
        throw DomainError("lhv_exhaustive_max: need at least one setting per side");
    }
    if (functional.size() != n_left) {
        throw DomainError("lhv_exhaustive_max: coefficient table has wrong number of rows");
    }
    for (const auto &row : functional) {
        if (row.size() != n_right) {
            throw DomainError("lhv_exhaustive_max: coefficient table has wrong number of columns");
        }
    }

    LHVMaximum best;
    best.max_value = -INFINITY;
    const std::size_t n_bits = n_left + n_right;
    best.n_strategies = std::size_t{1} << n_bits;
    for (std::size_t bits = 0; bits < best.n_strategies; bits++) {
        LHVStrategy s;
        for (std::size_t i = 0; i < n_left; i++) {
            s.left.push_back((bits >> i) & 1 ? -1 : 1);
        }
        for (std::size_t j = 0; j < n_right; j++) {
            s.right.push_back((bits >> (n_left + j)) & 1 ? -1 : 1);
        }
        double value = 0.0;
        for (std::size_t i = 0; i < n_left; i++) {
            for (std::size_t j = 0; j < n_right; j++) {
                value += functional[i][j] * s.left[i] * s.right[j];
            }
        }
        if (value > best.max_value + 1e-12) {
            best.max_value = value;
            best.argmax.clear();
        }
        if (std::abs(value - best.max_value) <= 1e-12) {
            best.argmax.push_back(std::move(s));
        }
    }
    return best;
}

namespace {

using Matrix2 = std::array<std::array<Amplitude, 2>, 2>;
using State8 = std::array<Amplitude, 8>;

const Matrix2 kSigmaX{{{0.0, 1.0}, {1.0, 0.0}}};
const Matrix2 kSigmaY{{{0.0, Amplitude(0.0, -1.0)}, {Amplitude(0.0, 1.0), 0.0}}};

State8 ghz_state() {
    State8 psi{};
    psi[0] = 1.0 / std::numbers::sqrt2;   // |uuu>
    psi[7] = -1.0 / std::numbers::sqrt2;  // |ddd>
    return psi;
}

// 8x8 matrix of a (x) b (x) c; particle 0 is the most significant qubit.
std::array<std::array<Amplitude, 8>, 8> kron3(const Matrix2 &a, const Matrix2 &b, const Matrix2 &c) {
    std::array<std::array<Amplitude, 8>, 8> out{};
    for (int r = 0; r < 8; r++) {
        for (int col = 0; col < 8; col++) {
            out[r][col] = a[r >> 2][col >> 2] * b[(r >> 1) & 1][(col >> 1) & 1] * c[r & 1][col & 1];
        }
    }
    return out;
}

}  // namespace

std::map<std::string, double> ghz_quantum_products() {
    const State8 psi = ghz_state();
    std::map<std::string, double> out;
    for (const std::string &label : kGhzLabels) {
        auto pick = [&](char axis) { return axis == 'x' ? kSigmaX : kSigmaY; };
        auto op = kron3(pick(label[0]), pick(label[1]), pick(label[2]));
        Amplitude expectation = 0.0;
        for (int r = 0; r < 8; r++) {
            for (int c = 0; c < 8; c++) {
                expectation += std::conj(psi[r]) * op[r][c] * psi[c];
            }
        }
        out[label] = expectation.real();
    }
    return out;
}

double ghz_state_norm() {
    double total = 0.0;
    for (const auto &a : ghz_state()) {
        total += std::norm(a);
    }
    return total;
}

std::array<int, 4> ghz_assignment_products(const GHZAssignment &g) {
    const auto &m = g.m;
    constexpr int x = 0, y = 1;
    return {m[0][x] * m[1][y] * m[2][y], m[0][y] * m[1][x] * m[2][y], m[0][y] * m[1][y] * m[2][x],
            m[0][x] * m[1][x] * m[2][x]};
}

MerminReport mermin_assignment_search() {
    MerminReport report;
    report.forcing_identity_holds = true;
    for (int bits = 0; bits < 64; bits++) {
        GHZAssignment g;
        for (int k = 0; k < 6; k++) {
            g.m[k / 2][k % 2] = (bits >> k) & 1 ? -1 : 1;
        }
        auto prod = ghz_assignment_products(g);
        std::string pattern;
        for (int v : prod) {
            pattern += v > 0 ? '+' : '-';
        }
        report.pattern_counts[pattern]++;
        report.n_assignments++;
        if (pattern == "+++-") {
            report.quantum_pattern_matches++;
        }
        if (pattern == "++++") {
            report.all_plus_matches++;
        }
        if (prod[0] * prod[1] * prod[2] != prod[3]) {
            report.forcing_identity_holds = false;
        }
    }
    return report;
}

DistributionGrid interferometer_grid(const std::vector<double> &alphas, const std::vector<double> &betas) {
    DistributionGrid grid{alphas, betas, {}};
    for (double a : alphas) {
        auto &row = grid.joint.emplace_back();
        for (double b : betas) {
            row.push_back(interferometer_joint(InterferometerSetting::congruent(a, b)));
        }
    }
    return grid;
}

double no_signaling_audit(const DistributionGrid &grid) {
    if (grid.alphas.empty() || grid.betas.empty()) {
        throw DomainError("no_signaling_audit: empty settings grid");
    }
    if (grid.joint.size() != grid.alphas.size()) {
        throw DomainError("no_signaling_audit: grid rows do not match alpha settings");
    }
    for (const auto &row : grid.joint) {
        if (row.size() != grid.betas.size()) {
            throw DomainError("no_signaling_audit: grid columns do not match beta settings");
        }
        for (const auto &j : row) {
            j.validate(1e-9);
        }
    }
    double worst = 0.0;
    for (Detector d : {Detector::U, Detector::D}) {
        for (std::size_t i = 0; i < grid.alphas.size(); i++) {
            auto [lo, hi] = std::minmax_element(grid.joint[i].begin(), grid.joint[i].end(),
                                                [&](const auto &p, const auto &q) {
                                                    return p.left_marginal(d) < q.left_marginal(d);
                                                });
            worst = std::max(worst, hi->left_marginal(d) - lo->left_marginal(d));
        }
        for (std::size_t j = 0; j < grid.betas.size(); j++) {
            double lo = INFINITY, hi = -INFINITY;
            for (std::size_t i = 0; i < grid.alphas.size(); i++) {
                double m = grid.joint[i][j].right_marginal(d);
                lo = std::min(lo, m);
                hi = std::max(hi, m);
            }
            worst = std::max(worst, hi - lo);
        }
    }
    return worst;
}

BellReport bell_report() {
    BellReport report;
    report.chsh_quantum =
        std::abs(chsh_value(singlet_spin_correlation, 0.0, kPi / 2.0, kPi / 4.0, 3.0 * kPi / 4.0));
    report.chsh_lhv_max = lhv_exhaustive_max(2, 2, chsh_table()).max_value;
    report.ghz_products = ghz_quantum_products();
    report.mermin_match_count = mermin_assignment_search().quantum_pattern_matches;
    auto grid = angle_grid(25);
    report.no_signaling_max_deviation = no_signaling_audit(interferometer_grid(grid, grid));
    return report;
}

}  // namespace pathsum
