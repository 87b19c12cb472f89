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
#ifndef PATHSUM_ENTANGLEMENT_H
#define PATHSUM_ENTANGLEMENT_H

#include <array>
#include <functional>
#include <map>
#include <variant>
#include <vector>

#include "pathsum/amplitude.h"
#include "pathsum/path.h"
#include "pathsum/propagator.h"

namespace pathsum {

// ---------------------------------------------------------------------------------------
// Two-particle interferometer with phase shifters alpha (left) and beta (right).

/// Class sums from the source to the beamsplitter inputs: C_A = <C|A>, C_B = <C|B>
/// on the left, Cp_Bp = <C'|B'>, Cp_Ap = <C'|A'> on the right.
struct ClassAmplitudes {
    Amplitude c_a;
    Amplitude c_b;
    Amplitude cp_bp;
    Amplitude cp_ap;
};

struct InterferometerSetting {
    double alpha = 0.0;
    double beta = 0.0;
    ClassAmplitudes amplitudes;

    /// Exact congruent construction: <C|B> = <C'|A'> = g, <C|A> = e^{i alpha} h,
    /// <C'|B'> = e^{i beta} h.
    static InterferometerSetting congruent(double alpha, double beta, Amplitude g = 1.0, Amplitude h = 1.0);

    /// Upper-path congruence check: <C|B> = <C'|A'> and <C|A> = e^{i(alpha-beta)} <C'|B'>.
    bool is_congruent(double tolerance = 1e-12) const;
};

enum class Detector { U, D };

struct JointDistribution {
    /// p[left][right], left in {u, d}, right in {u', d'}.
    std::array<std::array<double, 2>, 2> p{};

    double operator()(Detector left, Detector right) const {
        return p[static_cast<int>(left)][static_cast<int>(right)];
    }
    double left_marginal(Detector left) const {
        return (*this)(left, Detector::U) + (*this)(left, Detector::D);
    }
    double right_marginal(Detector right) const {
        return (*this)(Detector::U, right) + (*this)(Detector::D, right);
    }
    /// Throws DomainError unless entries are non-negative and sum to 1 within tolerance.
    void validate(double tolerance = 1e-12) const;
};

/// The two NIP products of expression (A, A') + (B, B'): X = <C|A><C'|A'>, Y = <C|B><C'|B'>.
std::pair<Amplitude, Amplitude> nip_products(const ClassAmplitudes &a);

/// Coincidence amplitude for (u, u'): <C|A><C'|A'> + <C|B><C'|B'>.
Amplitude coincidence_amplitude(const InterferometerSetting &setting);

/// Joint detector amplitudes [left][right] with beamsplitters t = 1/sqrt2, r = i/sqrt2.
std::array<std::array<Amplitude, 2>, 2> detector_amplitudes(const InterferometerSetting &setting);

/// Normalized joint distribution over the four detector pairs.
JointDistribution interferometer_joint(const InterferometerSetting &setting);

/// Distance between the coincidence amplitude and its congruent rewriting
/// <C|A><C|B> + <C'|B'><C'|A'>.
double substitution_residual(const InterferometerSetting &setting);

struct FactorizationDiagnostics {
    /// Least-squares constant c in amplitude ~ c (e^{i alpha} + e^{i beta}).
    Amplitude proportionality;
    double substitution_residual = 0.0;
    double proportionality_residual = 0.0;
    double residual = 0.0;
};

using SettingFamily = std::function<InterferometerSetting(double alpha, double beta)>;

/// Evaluates the family on every (alpha, beta) pair of the grid; residual is the larger of
/// the maximal substitution residual and the maximal deviation from c (e^{i alpha} + e^{i beta}).
FactorizationDiagnostics congruence_factorization_residual(const SettingFamily &family,
                                                           const std::vector<double> &alphas,
                                                           const std::vector<double> &betas);

/// n equally spaced angles over [0, 2 pi).
std::vector<double> angle_grid(std::size_t n);

// ---------------------------------------------------------------------------------------
// Entangled ring particles.

struct FixedMomentum {
    std::int64_t p = 1;
};
struct FullPropagator {};

struct RingPairSetting {
    double theta = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    RingParams params;
    std::variant<FixedMomentum, FullPropagator> mode = FixedMomentum{};

    /// Requires 0 <= theta <= beta <= alpha < pi.
    void validate() const;
};

struct RingPairAmplitude {
    /// sum_{|n| <= N} K_n(alpha, theta) K_{-n}(beta, theta).
    Amplitude amplitude;
    /// f = amplitude(alpha, beta) / amplitude(beta, beta).
    Amplitude factor;
    /// FullPropagator only: |f - e^{i(alpha-beta)} |f||.
    double residual = 0.0;
};

RingPairAmplitude entangled_ring_amplitude(const RingPairSetting &setting);

// ---------------------------------------------------------------------------------------
// Spin-1/2 singlet measured about the y-axis.

/// -cos(alpha - beta).
double singlet_correlation_closed_form(double alpha, double beta);

/// <psi| sigma(alpha) (x) sigma(beta) |psi> for the singlet, with explicit 4x4 matrices and
/// sigma(phi) = cos(phi) sigma_z + sin(phi) sigma_x.
double singlet_correlation_state_vector(double alpha, double beta);

/// State-vector value; throws std::logic_error if it disagrees with the closed form by
/// more than 1e-12.
double singlet_spin_correlation(double alpha, double beta);

/// Partitions an SO3Axis ensemble from theta to gamma (mod 2pi) by winding number about 0
/// and returns per-class sums of weight * exp(i S / hbar), S the free action with the given moment.
std::map<std::int64_t, Amplitude> spin_winding_reduction(const PathEnsemble &ensemble, double theta,
                                                         double gamma, double moment = 1.0);

}  // namespace pathsum

#endif
