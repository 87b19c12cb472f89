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
#include "pathsum/propagator.h"

#include <algorithm>
#include <cmath>

#include "pathsum/errors.h"
#include "pathsum/parallel.h"

namespace pathsum {

namespace {

void require_positive(double v, const char *what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be positive and finite");
    }
}

// One slice of the free kernel, normalization included.
struct SliceKernel {
    double mass;
    double dt;
    Amplitude norm;

    SliceKernel(double mass, double dt)
        : mass(mass), dt(dt), norm(inv_sqrt_i() * std::sqrt(mass / (kTwoPi * dt))) {
    }
    Amplitude operator()(double from, double to) const {
        double d = to - from;
        return norm * exp_action({0.5 * mass * d * d / dt});
    }
};

// A slice of lattice sites with their measure factors (weight * spacing).
struct Layer {
    std::vector<double> x;
    std::vector<double> measure;
};

Layer point_layer(double x) {
    return {{x}, {1.0}};
}

Layer lattice_layer(const LatticeSpec &lat, double centre) {
    Layer layer;
    auto off = lat.offsets();
    auto w = lat.weights();
    layer.x.resize(off.size());
    layer.measure.resize(off.size());
    for (std::size_t j = 0; j < off.size(); j++) {
        layer.x[j] = centre + off[j];
        layer.measure[j] = w[j] * lat.spacing;
    }
    return layer;
}

// out[j] = sum_i amp[i] * measure[i] * kernel(from[i], to[j]); each output is an
// independent in-order sum, so the result does not depend on the thread count.
std::vector<Amplitude> contract(const Layer &from, const std::vector<Amplitude> &amp,
                                const std::vector<double> &to, const SliceKernel &kernel) {
    std::vector<Amplitude> weighted(amp.size());
    for (std::size_t i = 0; i < amp.size(); i++) {
        weighted[i] = amp[i] * from.measure[i];
    }
    std::vector<Amplitude> out(to.size());
    parallel_for(to.size(), 16, [&](std::size_t j0, std::size_t j1) {
        for (std::size_t j = j0; j < j1; j++) {
            Amplitude acc = 0.0;
            for (std::size_t i = 0; i < weighted.size(); i++) {
                acc += weighted[i] * kernel(from.x[i], to[j]);
            }
            out[j] = acc;
        }
    });
    return out;
}

std::vector<Amplitude> transfer_row(double x1, std::span<const double> targets, double centre,
                                    double t_total, double mass, const FreeSliceOptions &options) {
    const std::size_t n = options.n_slices;
    SliceKernel kernel(mass, t_total / static_cast<double>(n));
    Layer layer = point_layer(x1);
    std::vector<Amplitude> amp{1.0};
    for (std::size_t k = 1; k < n; k++) {
        double c = x1 + (centre - x1) * static_cast<double>(k) / static_cast<double>(n);
        Layer next = lattice_layer(options.lattice, c);
        amp = contract(layer, amp, next.x, kernel);
        layer = std::move(next);
    }
    return contract(layer, amp, std::vector<double>(targets.begin(), targets.end()), kernel);
}

Amplitude enumerate_paths(double x1, double x2, double t_total, double mass,
                          const FreeSliceOptions &options, std::uint64_t &n_paths) {
    const std::size_t n = options.n_slices;
    const std::size_t interior = n - 1;
    const LatticeSpec &lat = options.lattice;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < interior; i++) {
        if (count > options.enumeration_cap / lat.sites) {
            throw ResourceError("free_propagator_sliced: " + std::to_string(lat.sites) + "^" +
                                    std::to_string(interior) +
                                    " lattice paths exceed the enumeration cap",
                                options.enumeration_cap);
        }
        count *= lat.sites;
    }
    n_paths = count;

    const double dt = t_total / static_cast<double>(n);
    const auto off = lat.offsets();
    const auto w = lat.weights();
    std::vector<double> centre(n + 1);
    for (std::size_t k = 0; k <= n; k++) {
        centre[k] = x1 + (x2 - x1) * static_cast<double>(k) / static_cast<double>(n);
    }
    centre[n] = x2;

    Amplitude sum = parallel_sum(count, [&](std::size_t index) {
        std::vector<double> x(centre);
        double weight = 1.0;
        // Mixed-radix decode, last interior slice fastest (matches sample_paths order).
        std::size_t rest = index;
        for (std::size_t j = interior; j-- > 0;) {
            std::size_t digit = rest % lat.sites;
            rest /= lat.sites;
            x[j + 1] += off[digit];
            weight *= w[digit];
        }
        return weight * exp_action(free_action(Path(Space::Line1D, std::move(x), dt), mass));
    });
    Amplitude norm = std::pow(inv_sqrt_i() * std::sqrt(mass / (kTwoPi * dt)), static_cast<double>(n));
    return sum * norm * std::pow(lat.spacing, static_cast<double>(interior));
}

Amplitude sliced_value(double x1, double x2, double t_total, double mass,
                       const FreeSliceOptions &options, std::uint64_t &n_paths) {
    if (options.method == SumMethod::Enumeration) {
        return enumerate_paths(x1, x2, t_total, mass, options, n_paths);
    }
    n_paths = 1;
    for (std::size_t i = 1; i < options.n_slices; i++) {
        n_paths = n_paths > UINT64_MAX / options.lattice.sites ? UINT64_MAX
                                                               : n_paths * options.lattice.sites;
    }
    double target[] = {x2};
    return transfer_row(x1, target, x2, t_total, mass, options)[0];
}

void validate_free(double x1, double x2, double t_total, double mass, const FreeSliceOptions &o) {
    if (!std::isfinite(x1) || !std::isfinite(x2)) {
        throw DomainError("free propagator: endpoints must be finite");
    }
    require_positive(t_total, "t_total");
    require_positive(mass, "mass");
    if (o.n_slices < 1) {
        throw DomainError("free propagator: n_slices must be >= 1");
    }
    if (o.lattice.sites < 1) {
        throw DomainError("free propagator: lattice needs at least one site");
    }
    require_positive(o.lattice.spacing, "lattice spacing");
}

}  // namespace

Amplitude free_kernel(double x1, double x2, double t_total, double mass) {
    require_positive(t_total, "t_total");
    require_positive(mass, "mass");
    double d = x2 - x1;
    return inv_sqrt_i() * std::sqrt(mass / (kTwoPi * t_total)) *
           exp_action({0.5 * mass * d * d / t_total});
}

SlicedPropagator free_propagator_sliced(double x1, double x2, double t_total, double mass,
                                        const FreeSliceOptions &options) {
    validate_free(x1, x2, t_total, mass, options);
    SlicedPropagator result;
    result.value = sliced_value(x1, x2, t_total, mass, options, result.n_paths);

    const LatticeSpec &lat = options.lattice;
    double core = lat.half_extent() - lat.taper_width;
    if (options.check_window && options.n_slices > 1 && core > 2.0 * lat.spacing) {
        FreeSliceOptions shrunk = options;
        shrunk.lattice = LatticeSpec::window(lat.taper_width + 0.5 * core, lat.spacing, lat.taper_width);
        std::uint64_t ignored = 0;
        Amplitude smaller = sliced_value(x1, x2, t_total, mass, shrunk, ignored);
        result.boundary_estimate = std::abs(result.value - smaller) / std::abs(result.value);
        result.window_warning = result.boundary_estimate > options.window_warning_threshold;
    }
    return result;
}

std::vector<Amplitude> free_propagator_row(double x1, std::span<const double> targets,
                                           double target_centre, double t_total, double mass,
                                           const FreeSliceOptions &options) {
    validate_free(x1, target_centre, t_total, mass, options);
    return transfer_row(x1, targets, target_centre, t_total, mass, options);
}

Amplitude chapman_kolmogorov(double x1, double x2, double t_total, double mass,
                             const LatticeSpec &intermediate, const FreeSliceOptions &half_step) {
    validate_free(x1, x2, t_total, mass, half_step);
    double mid = 0.5 * (x1 + x2);
    Layer y = lattice_layer(intermediate, mid);
    auto from_x1 = transfer_row(x1, y.x, mid, 0.5 * t_total, mass, half_step);
    // K(x2, y) = K(y, x2) by symmetry of the kinetic action.
    auto to_x2 = transfer_row(x2, y.x, mid, 0.5 * t_total, mass, half_step);
    Amplitude total = 0.0;
    for (std::size_t j = 0; j < y.x.size(); j++) {
        total += to_x2[j] * from_x1[j] * y.measure[j];
    }
    return total;
}

MirrorResult mirror_amplitude(const MirrorGeometry &g, std::size_t n_reflection_points, double mass,
                              double t_total) {
    if (n_reflection_points < 3) {
        throw DomainError("mirror_amplitude: need at least 3 reflection points");
    }
    if (!(g.source_y > 0.0) || !(g.receiver_y > 0.0)) {
        throw DomainError("mirror_amplitude: source and receiver must lie strictly above the mirror");
    }
    if (!(g.mirror_right > g.mirror_left)) {
        throw DomainError("mirror_amplitude: mirror segment has no extent");
    }
    require_positive(mass, "mass");
    require_positive(t_total, "t_total");

    MirrorResult result;
    SpiralTrace &trace = result.trace;
    const std::size_t n = n_reflection_points;
    result.spacing = (g.mirror_right - g.mirror_left) / static_cast<double>(n - 1);
    trace.positions.resize(n);
    trace.phases.resize(n);
    trace.partial_sums.resize(n);
    Amplitude running = 0.0;
    for (std::size_t k = 0; k < n; k++) {
        double x = g.mirror_left + result.spacing * static_cast<double>(k);
        double length = std::hypot(x - g.source_x, g.source_y) + std::hypot(g.receiver_x - x, g.receiver_y);
        double phase = 0.5 * mass * length * length / t_total;
        trace.positions[k] = x;
        trace.phases[k] = phase;
        running += exp_action({phase});
        trace.partial_sums[k] = running;
    }
    result.total = running;
    return result;
}

std::size_t stationary_index(const SpiralTrace &trace) {
    return static_cast<std::size_t>(
        std::distance(trace.phases.begin(), std::min_element(trace.phases.begin(), trace.phases.end())));
}

Amplitude stationary_zone_sum(const SpiralTrace &trace, double phase_window) {
    double stationary = trace.phases[stationary_index(trace)];
    Amplitude sum = 0.0;
    for (std::size_t k = 0; k < trace.phases.size(); k++) {
        if (std::abs(trace.phases[k] - stationary) <= phase_window) {
            sum += trace.term(k);
        }
    }
    return sum;
}

SpiralShape spiral_shape(const SpiralTrace &trace) {
    SpiralShape shape;
    const auto &ph = trace.phases;
    if (ph.size() < 3) {
        return shape;
    }
    std::vector<double> turn(ph.size() - 1);
    for (std::size_t k = 0; k + 1 < ph.size(); k++) {
        turn[k] = std::remainder(ph[k + 1] - ph[k], kTwoPi);
    }
    auto sign = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
    shape.left_turn_sign = sign(turn.front());
    shape.right_turn_sign = sign(turn.back());
    std::size_t centre = stationary_index(trace);
    int last = 0;
    for (std::size_t k = 0; k < turn.size(); k++) {
        (k < centre ? shape.left_turning : shape.right_turning) += std::abs(turn[k]);
        int s = sign(turn[k]);
        if (s != 0) {
            if (last != 0 && s != last) {
                shape.sign_changes++;
            }
            last = s;
        }
    }
    return shape;
}

void RingParams::validate() const {
    require_positive(moment, "moment");
    require_positive(t_total, "t_total");
    if (n_cutoff < 1 || m_cutoff < 1) {
        throw DomainError("RingParams: cutoffs must be >= 1");
    }
    if (!(damping >= 0.0) || !std::isfinite(damping)) {
        throw DomainError("RingParams: damping must be finite and non-negative");
    }
}

namespace {

std::complex<double> complex_time(const RingParams &p) {
    return {p.t_total, -p.t_total * p.damping};
}

void require_angle(double a, const char *name) {
    if (!(a >= 0.0 && a <= kTwoPi)) {
        throw DomainError(std::string("ring_propagator: ") + name + " must lie in [0, 2pi]");
    }
}

}  // namespace

Amplitude ring_winding_kernel(double alpha, double theta, std::int64_t n, const RingParams &params) {
    const std::complex<double> tau = complex_time(params);
    const std::complex<double> i(0.0, 1.0);
    double d = alpha - theta + kTwoPi * static_cast<double>(n);
    return inv_sqrt_i() * std::sqrt(params.moment / (kTwoPi * tau)) *
           std::exp(i * params.moment * d * d / (2.0 * tau));
}

PropagatorResult ring_propagator(double alpha, double theta, const RingParams &params,
                                 double tolerance) {
    params.validate();
    require_angle(alpha, "alpha");
    require_angle(theta, "theta");
    PropagatorResult result;
    for (std::int64_t n = -params.n_cutoff; n <= params.n_cutoff; n++) {
        Amplitude k = ring_winding_kernel(alpha, theta, n, params);
        result.per_class.emplace(HomotopyClass::winding(n), k);
        result.value += k;
    }
    result.n_terms = result.per_class.size();
    result.truncation_error = std::abs(result.per_class.begin()->second) +
                              std::abs(result.per_class.rbegin()->second);
    result.truncation_warning = result.truncation_error > tolerance;
    return result;
}

Amplitude ring_propagator_spectral(double alpha, double theta, const RingParams &params) {
    params.validate();
    const std::complex<double> tau = complex_time(params);
    const std::complex<double> i(0.0, 1.0);
    Amplitude sum = 0.0;
    for (std::int64_t m = -params.m_cutoff; m <= params.m_cutoff; m++) {
        double md = static_cast<double>(m);
        sum += std::polar(1.0, md * (alpha - theta)) * std::exp(-i * md * md * tau / (2.0 * params.moment));
    }
    return sum / kTwoPi;
}

PropagatorResult ring_propagator_fixed_momentum(double alpha, double theta, std::int64_t momentum,
                                                std::int64_t n_cutoff) {
    if (n_cutoff < 0) {
        throw DomainError("ring_propagator_fixed_momentum: n_cutoff must be >= 0");
    }
    PropagatorResult result;
    const double p = static_cast<double>(momentum);
    for (std::int64_t n = -n_cutoff; n <= n_cutoff; n++) {
        Amplitude k = std::polar(1.0, p * (alpha - theta + kTwoPi * static_cast<double>(n)));
        result.per_class.emplace(HomotopyClass::winding(n), k);
        result.value += k;
    }
    result.n_terms = result.per_class.size();
    return result;
}

}  // namespace pathsum
