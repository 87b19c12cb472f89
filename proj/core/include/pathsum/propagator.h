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
#ifndef PATHSUM_PROPAGATOR_H
#define PATHSUM_PROPAGATOR_H

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pathsum/amplitude.h"
#include "pathsum/path.h"

namespace pathsum {

// ---------------------------------------------------------------------------------------
// Free particle on a line.

/// Analytic kernel sqrt(m / (2 pi i T)) exp(i m (x2 - x1)^2 / (2T)), sqrt(1/i) = e^{-i pi/4}.
Amplitude free_kernel(double x1, double x2, double t_total, double mass);

enum class SumMethod {
    /// Slice-by-slice contraction of the lattice path sum, O(n_slices * sites^2).
    TransferMatrix,
    /// Explicit enumeration of every lattice path, O(sites^(n_slices-1)). Capped.
    Enumeration,
};

struct FreeSliceOptions {
    std::size_t n_slices = 4;
    LatticeSpec lattice = LatticeSpec::window(14.0, 0.02, 6.0);
    SumMethod method = SumMethod::TransferMatrix;
    std::uint64_t enumeration_cap = 10'000'000;
    /// Recompute with half the untapered core and flag when |dK|/|K| exceeds this.
    bool check_window = true;
    double window_warning_threshold = 1e-3;
};

struct SlicedPropagator {
    Amplitude value;
    std::uint64_t n_paths = 0;
    /// |K - K_shrunk| / |K|, or -1 when not computed.
    double boundary_estimate = -1.0;
    bool window_warning = false;
};

/// Time-sliced lattice path sum
///   sum_paths w(path) exp(i S[path]) dx^(n_slices-1) (m / (2 pi i dt))^(n_slices/2)
/// with interior lattices centred on the straight path from x1 to x2.
SlicedPropagator free_propagator_sliced(double x1, double x2, double t_total, double mass,
                                        const FreeSliceOptions &options = {});

/// The same sliced sum from x1 to each point of targets (one transfer-matrix sweep; the
/// interior lattices follow the straight line from x1 to target_centre).
std::vector<Amplitude> free_propagator_row(double x1, std::span<const double> targets,
                                           double target_centre, double t_total, double mass,
                                           const FreeSliceOptions &options = {});

/// Composes two sliced propagations of t_total/2 over an intermediate lattice centred at
/// the midpoint: sum_y w(y) K(x2, y) K(y, x1) dy.
Amplitude chapman_kolmogorov(double x1, double x2, double t_total, double mass,
                             const LatticeSpec &intermediate, const FreeSliceOptions &half_step = {});

// ---------------------------------------------------------------------------------------
// Mirror reflection and the Cornu spiral.

struct MirrorGeometry {
    double source_x = -1.0;
    double source_y = 1.0;
    double receiver_x = 1.0;
    double receiver_y = 1.0;
    double mirror_left = -3.0;
    double mirror_right = 3.0;
};

/// Running prefix sums of the per-reflection-point terms, left to right.
struct SpiralTrace {
    std::vector<Amplitude> partial_sums;
    /// Reflection point x coordinate and unreduced phase S/hbar of each term.
    std::vector<double> positions;
    std::vector<double> phases;

    Amplitude total() const {
        return partial_sums.back();
    }
    Amplitude term(std::size_t k) const {
        return k == 0 ? partial_sums[0] : partial_sums[k] - partial_sums[k - 1];
    }
};

struct MirrorResult {
    Amplitude total;
    SpiralTrace trace;
    double spacing = 0.0;
};

/// Each reflection point contributes exp(i m (d1 + d2)^2 / (2T)): the free action of the
/// two-leg path through it traversed at constant speed in total time T.
MirrorResult mirror_amplitude(const MirrorGeometry &geometry, std::size_t n_reflection_points,
                              double mass, double t_total);

/// Index of the stationary (minimum-phase) reflection point.
std::size_t stationary_index(const SpiralTrace &trace);

/// Sum of the terms whose phase lies within phase_window of the stationary phase.
Amplitude stationary_zone_sum(const SpiralTrace &trace, double phase_window = kPi);

/// Turning of the prefix-sum polyline at both ends. Vertex k turns by the phase increment
/// between successive terms, so opposite signs at the two ends mark a double spiral.
struct SpiralShape {
    int left_turn_sign = 0;
    int right_turn_sign = 0;
    /// Accumulated |turning| from each end to the stationary point, radians.
    double left_turning = 0.0;
    double right_turning = 0.0;
    std::size_t sign_changes = 0;

    bool is_double_spiral() const {
        return left_turn_sign != 0 && left_turn_sign == -right_turn_sign && left_turning >= kTwoPi &&
               right_turning >= kTwoPi;
    }
};
SpiralShape spiral_shape(const SpiralTrace &trace);

// ---------------------------------------------------------------------------------------
// Particle on a ring.

struct RingParams {
    /// M R^2.
    double moment = 1.0;
    double t_total = kTwoPi;
    std::int64_t n_cutoff = 40;
    std::int64_t m_cutoff = 40;
    /// Propagation time is continued to t_total (1 - i damping). 0 gives the real-time
    /// kernels, whose winding and spectral series do not converge.
    double damping = 0.0;

    void validate() const;
};

struct PropagatorResult {
    Amplitude value;
    std::map<HomotopyClass, Amplitude> per_class;
    std::size_t n_terms = 0;
    /// Modulus of the outermost retained terms; a proxy for the truncation error.
    double truncation_error = 0.0;
    bool truncation_warning = false;
};

/// Winding-class term K_n: the free kernel at unwrapped displacement alpha - theta + 2 pi n.
Amplitude ring_winding_kernel(double alpha, double theta, std::int64_t n, const RingParams &params);

/// K(alpha, theta) = sum_{|n| <= n_cutoff} K_n(alpha, theta). Angles in [0, 2 pi].
PropagatorResult ring_propagator(double alpha, double theta, const RingParams &params,
                                 double tolerance = 1e-6);

/// Eigenfunction expansion (1/2pi) sum_{|m| <= m_cutoff} e^{i m (alpha - theta)} e^{-i m^2 T / (2 M R^2)}.
Amplitude ring_propagator_spectral(double alpha, double theta, const RingParams &params);

/// Fixed momentum index p: per_class[n] = exp(i p (alpha - theta + 2 pi n)).
PropagatorResult ring_propagator_fixed_momentum(double alpha, double theta, std::int64_t momentum,
                                                std::int64_t n_cutoff);

}  // namespace pathsum

#endif
