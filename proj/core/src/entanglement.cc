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
#include "pathsum/entanglement.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pathsum/errors.h"

namespace pathsum {

namespace {
using Matrix2 = std::array<std::array<Amplitude, 2>, 2>;
using Matrix4 = std::array<std::array<Amplitude, 4>, 4>;

const Amplitude kT = 1.0 / std::numbers::sqrt2;
const Amplitude kR = Amplitude(0.0, 1.0) / std::numbers::sqrt2;
}  // namespace

InterferometerSetting InterferometerSetting::congruent(double alpha, double beta, Amplitude g, Amplitude h) {
    InterferometerSetting s;
    s.alpha = alpha;
    s.beta = beta;
    s.amplitudes.c_b = g;
    s.amplitudes.cp_ap = g;
    s.amplitudes.c_a = std::polar(1.0, alpha) * h;
    s.amplitudes.cp_bp = std::polar(1.0, beta) * h;
    return s;
}

bool InterferometerSetting::is_congruent(double tolerance) const {
    const auto &a = amplitudes;
    return std::abs(a.c_b - a.cp_ap) <= tolerance &&
           std::abs(a.c_a - std::polar(1.0, alpha - beta) * a.cp_bp) <= tolerance;
}

void JointDistribution::validate(double tolerance) const {
    double total = 0.0;
    for (const auto &row : p) {
        for (double v : row) {
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw DomainError("JointDistribution: entries must be finite and non-negative");
            }
            total += v;
        }
    }
    if (std::abs(total - 1.0) > tolerance) {
        throw DomainError("JointDistribution: entries sum to " + std::to_string(total) + ", not 1");
    }
}

std::pair<Amplitude, Amplitude> nip_products(const ClassAmplitudes &a) {
    return {a.c_a * a.cp_ap, a.c_b * a.cp_bp};
}

Amplitude coincidence_amplitude(const InterferometerSetting &setting) {
    auto [x, y] = nip_products(setting.amplitudes);
    return x + y;
}

std::array<std::array<Amplitude, 2>, 2> detector_amplitudes(const InterferometerSetting &setting) {
    auto [x, y] = nip_products(setting.amplitudes);
    // Coefficient of each class at each port. Left: u transmits A, reflects B.
    // Right: u' reflects A', transmits B'.
    const std::array<Amplitude, 2> left_a{kT, kR}, left_b{kR, kT};
    const std::array<Amplitude, 2> right_ap{kR, kT}, right_bp{kT, kR};
    std::array<std::array<Amplitude, 2>, 2> out{};
    for (int l = 0; l < 2; l++) {
        for (int r = 0; r < 2; r++) {
            out[l][r] = left_a[l] * right_ap[r] * x + left_b[l] * right_bp[r] * y;
        }
    }
    return out;
}

JointDistribution interferometer_joint(const InterferometerSetting &setting) {
    auto amp = detector_amplitudes(setting);
    double total = 0.0;
    for (const auto &row : amp) {
        for (const auto &a : row) {
            total += std::norm(a);
        }
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw DomainError("interferometer_joint: class amplitudes are not normalizable");
    }
    JointDistribution joint;
    for (int l = 0; l < 2; l++) {
        for (int r = 0; r < 2; r++) {
            joint.p[l][r] = std::norm(amp[l][r]) / total;
        }
    }
    return joint;
}

double substitution_residual(const InterferometerSetting &setting) {
    const auto &a = setting.amplitudes;
    Amplitude rewritten = a.c_a * a.c_b + a.cp_bp * a.cp_ap;
    return std::abs(coincidence_amplitude(setting) - rewritten);
}

namespace {

// Upper paths on the side with the larger shift carry the extra e^{i |alpha - beta|} over
// their congruent partners; the beta > alpha case swaps the roles of the two sides.
Amplitude factored_amplitude(const InterferometerSetting &s) {
    const auto &a = s.amplitudes;
    if (s.alpha >= s.beta) {
        return (std::polar(1.0, s.alpha - s.beta) + 1.0) * a.cp_bp * a.cp_ap;
    }
    return (std::polar(1.0, s.beta - s.alpha) + 1.0) * a.c_a * a.c_b;
}

}  // namespace

FactorizationDiagnostics congruence_factorization_residual(const SettingFamily &family,
                                                           const std::vector<double> &alphas,
                                                           const std::vector<double> &betas) {
    if (alphas.empty() || betas.empty()) {
        throw DomainError("congruence_factorization_residual: empty grid");
    }
    FactorizationDiagnostics diag;
    std::vector<Amplitude> amplitude, basis;
    for (double alpha : alphas) {
        for (double beta : betas) {
            InterferometerSetting s = family(alpha, beta);
            Amplitude eq2 = coincidence_amplitude(s);
            diag.substitution_residual = std::max(
                {diag.substitution_residual, substitution_residual(s), std::abs(eq2 - factored_amplitude(s))});
            amplitude.push_back(eq2);
            basis.push_back(std::polar(1.0, alpha) + std::polar(1.0, beta));
        }
    }
    Amplitude num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < basis.size(); k++) {
        num += std::conj(basis[k]) * amplitude[k];
        den += std::norm(basis[k]);
    }
    diag.proportionality = den > 0.0 ? num / den : Amplitude(0.0);
    for (std::size_t k = 0; k < basis.size(); k++) {
        diag.proportionality_residual =
            std::max(diag.proportionality_residual, std::abs(amplitude[k] - diag.proportionality * basis[k]));
    }
    diag.residual = std::max(diag.substitution_residual, diag.proportionality_residual);
    return diag;
}

std::vector<double> angle_grid(std::size_t n) {
    std::vector<double> grid(n);
    for (std::size_t k = 0; k < n; k++) {
        grid[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    }
    return grid;
}

void RingPairSetting::validate() const {
    if (!(0.0 <= theta && theta <= beta && beta <= alpha && alpha < kPi)) {
        throw DomainError("RingPairSetting: need 0 <= theta <= beta <= alpha < pi");
    }
    params.validate();
}

namespace {

Amplitude pair_sum(double alpha, double beta, const RingPairSetting &s) {
    Amplitude sum = 0.0;
    const std::int64_t cutoff = s.params.n_cutoff;
    if (const auto *fm = std::get_if<FixedMomentum>(&s.mode)) {
        const double p = static_cast<double>(fm->p);
        for (std::int64_t n = -cutoff; n <= cutoff; n++) {
            double w = kTwoPi * static_cast<double>(n);
            sum += std::polar(1.0, p * (alpha - s.theta + w)) * std::polar(1.0, p * (beta - s.theta - w));
        }
    } else {
        for (std::int64_t n = -cutoff; n <= cutoff; n++) {
            sum += ring_winding_kernel(alpha, s.theta, n, s.params) *
                   ring_winding_kernel(beta, s.theta, -n, s.params);
        }
    }
    return sum;
}

}  // namespace

RingPairAmplitude entangled_ring_amplitude(const RingPairSetting &setting) {
    setting.validate();
    RingPairAmplitude out;
    out.amplitude = pair_sum(setting.alpha, setting.beta, setting);
    Amplitude reference = pair_sum(setting.beta, setting.beta, setting);
    if (std::abs(reference) < 1e-12) {
        throw DomainError("entangled_ring_amplitude: reference sum at (beta, beta) vanishes");
    }
    out.factor = out.amplitude / reference;
    if (std::holds_alternative<FullPropagator>(setting.mode)) {
        out.residual = std::abs(out.factor - std::polar(std::abs(out.factor), setting.alpha - setting.beta));
    }
    return out;
}

double singlet_correlation_closed_form(double alpha, double beta) {
    return -std::cos(alpha - beta);
}

namespace {

Matrix2 spin_along(double phi) {
    // cos(phi) sigma_z + sin(phi) sigma_x
    return {{{std::cos(phi), std::sin(phi)}, {std::sin(phi), -std::cos(phi)}}};
}

Matrix4 kron(const Matrix2 &a, const Matrix2 &b) {
    Matrix4 out{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                for (int l = 0; l < 2; l++) {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

}  // namespace

double singlet_correlation_state_vector(double alpha, double beta) {
    // (|up,down> - |down,up>) / sqrt2 in the basis |uu>, |ud>, |du>, |dd>.
    const double s = 1.0 / std::numbers::sqrt2;
    const std::array<Amplitude, 4> psi{0.0, s, -s, 0.0};
    Matrix4 op = kron(spin_along(alpha), spin_along(beta));
    Amplitude expectation = 0.0;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            expectation += std::conj(psi[i]) * op[i][j] * psi[j];
        }
    }
    return expectation.real();
}

double singlet_spin_correlation(double alpha, double beta) {
    double from_state = singlet_correlation_state_vector(alpha, beta);
    double closed = singlet_correlation_closed_form(alpha, beta);
    if (std::abs(from_state - closed) > 1e-12) {
        throw std::logic_error("singlet_spin_correlation: state vector and closed form disagree");
    }
    return from_state;
}

std::map<std::int64_t, Amplitude> spin_winding_reduction(const PathEnsemble &ensemble, double theta,
                                                         double gamma, double moment) {
    if (ensemble.space() != Space::SO3Axis) {
        throw DomainError("spin_winding_reduction: paths must be confined to the SO(3) y-axis");
    }
    std::map<std::int64_t, Amplitude> classes;
    for (std::size_t i = 0; i < ensemble.size(); i++) {
        const Path &path = ensemble.paths()[i];
        double end_gap = std::remainder(path.back() - gamma, kTwoPi);
        if (std::abs(path.front() - theta) > 1e-9 || std::abs(end_gap) > 1e-9) {
            throw DomainError("spin_winding_reduction: path does not run from theta to gamma");
        }
        classes[winding_number(path, 0.0)] += ensemble.weight(i) * exp_action(free_action(path, moment));
    }
    return classes;
}

}  // namespace pathsum
