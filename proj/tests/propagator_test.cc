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


#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "pathsum/errors.h"
#include "pathsum/propagator.h"
#include "pathsum/rng.h"

namespace pathsum {
namespace {

FreeSliceOptions small_lattice(SumMethod method) {
    FreeSliceOptions opt;
    opt.n_slices = 3;
    opt.lattice = LatticeSpec::window(0.5, 0.05, 0.2);
    opt.method = method;
    opt.check_window = false;
    return opt;
}

double rel(Amplitude a, Amplitude b) {
    return std::abs(a - b) / std::abs(b);
}

TEST(FreePropagator, enumeration_matches_transfer_matrix) {
    auto tm = free_propagator_sliced(0.1, 0.7, 0.5, 1.3, small_lattice(SumMethod::TransferMatrix));
    auto en = free_propagator_sliced(0.1, 0.7, 0.5, 1.3, small_lattice(SumMethod::Enumeration));
    EXPECT_EQ(en.n_paths, 21u * 21u);
    EXPECT_LT(std::abs(tm.value - en.value), 1e-12);
}

TEST(FreePropagator, enumeration_cap) {
    FreeSliceOptions opt;
    opt.method = SumMethod::Enumeration;
    EXPECT_THROW(free_propagator_sliced(0.0, 1.0, 1.0, 1.0, opt), ResourceError);
}

TEST(FreePropagator, matches_analytic_kernel) {
    for (double d : {0.0, 0.5, 1.0, 2.0}) {
        auto k = free_propagator_sliced(0.0, d, 1.0, 1.0);
        EXPECT_LT(rel(k.value, free_kernel(0.0, d, 1.0, 1.0)), 1e-6) << "d=" << d;
        EXPECT_FALSE(k.window_warning);
        EXPECT_GE(k.boundary_estimate, 0.0);
    }
}

TEST(FreePropagator, analytic_kernel_value) {
    // T = m = 1, x1 = x2: sqrt(1/(2 pi i)).
    Amplitude k = free_kernel(0.0, 0.0, 1.0, 1.0);
    EXPECT_LT(std::abs(k - inv_sqrt_i() / std::sqrt(kTwoPi)), 1e-15);
    EXPECT_NEAR(std::abs(free_kernel(0.0, 3.0, 1.0, 1.0)), 1.0 / std::sqrt(kTwoPi), 1e-15);
}

TEST(FreePropagator, symmetric_in_endpoints) {
    auto a = free_propagator_sliced(-0.3, 0.9, 1.0, 1.0);
    auto b = free_propagator_sliced(0.9, -0.3, 1.0, 1.0);
    EXPECT_LT(rel(a.value, b.value), 1e-10);
}

TEST(FreePropagator, window_doubling_is_stable) {
    auto base = free_propagator_sliced(0.0, 1.0, 1.0, 1.0);
    FreeSliceOptions wide;
    wide.lattice = LatticeSpec::window(28.0, 0.02, 12.0);
    wide.check_window = false;
    auto doubled = free_propagator_sliced(0.0, 1.0, 1.0, 1.0, wide);
    EXPECT_LT(std::abs(std::abs(doubled.value) - std::abs(base.value)), 1e-6);
}

TEST(FreePropagator, narrow_window_warns) {
    FreeSliceOptions opt;
    opt.lattice = LatticeSpec::window(0.5, 0.02, 0.0);
    auto k = free_propagator_sliced(0.0, 1.0, 1.0, 1.0, opt);
    EXPECT_TRUE(k.window_warning);
}

TEST(FreePropagator, row_matches_pointwise) {
    std::vector<double> targets{0.8, 1.0, 1.2};
    auto row = free_propagator_row(0.0, targets, 1.0, 1.0, 1.0);
    ASSERT_EQ(row.size(), 3u);
    auto centre = free_propagator_sliced(0.0, 1.0, 1.0, 1.0);
    EXPECT_LT(std::abs(row[1] - centre.value), 1e-13);
    for (std::size_t i = 0; i < 3; i++) {
        EXPECT_LT(rel(row[i], free_kernel(0.0, targets[i], 1.0, 1.0)), 1e-6);
    }
}

TEST(FreePropagator, chapman_kolmogorov_composition) {
    FreeSliceOptions half;
    half.n_slices = 2;
    half.check_window = false;
    Amplitude composed = chapman_kolmogorov(0.0, 1.0, 1.0, 1.0, LatticeSpec::window(14.0, 0.02, 6.0), half);
    EXPECT_LT(rel(composed, free_kernel(0.0, 1.0, 1.0, 1.0)), 1e-6);
}

TEST(FreePropagator, rejects_bad_arguments) {
    EXPECT_THROW(free_propagator_sliced(0.0, 1.0, 0.0, 1.0), DomainError);
    EXPECT_THROW(free_propagator_sliced(0.0, 1.0, 1.0, -1.0), DomainError);
    FreeSliceOptions opt;
    opt.n_slices = 0;
    EXPECT_THROW(free_propagator_sliced(0.0, 1.0, 1.0, 1.0, opt), DomainError);
}

// ---------------------------------------------------------------------------------------

TEST(Cornu, terms_have_unit_modulus) {
    auto r = mirror_amplitude({}, 2001, 20.0, 1.0);
    ASSERT_EQ(r.trace.partial_sums.size(), 2001u);
    for (std::size_t k = 0; k < 2001; k++) {
        EXPECT_NEAR(std::abs(r.trace.term(k)), 1.0, 1e-11);
    }
    EXPECT_NEAR(r.spacing, 6.0 / 2000.0, 1e-15);
}

TEST(Cornu, symmetric_geometry_is_stationary_at_centre) {
    auto r = mirror_amplitude({}, 20001, 20.0, 1.0);
    EXPECT_EQ(stationary_index(r.trace), 10000u);
    EXPECT_NEAR(r.trace.positions[10000], 0.0, 1e-12);
    EXPECT_TRUE(spiral_shape(r.trace).is_double_spiral());
    double zone = std::abs(stationary_zone_sum(r.trace)) / std::abs(r.total);
    EXPECT_GT(zone, 0.9);
}

TEST(Cornu, swapping_source_and_receiver_keeps_total) {
    MirrorGeometry g{-1.0, 0.5, 2.0, 1.5, -3.0, 4.0};
    MirrorGeometry swapped{2.0, 1.5, -1.0, 0.5, -3.0, 4.0};
    auto a = mirror_amplitude(g, 4001, 20.0, 1.0);
    auto b = mirror_amplitude(swapped, 4001, 20.0, 1.0);
    EXPECT_LT(std::abs(a.total - b.total), 1e-9 * std::abs(a.total));
}

TEST(Cornu, normalized_sum_is_cauchy_in_resolution) {
    double prev_gap = INFINITY;
    Amplitude prev = mirror_amplitude({}, 5001, 20.0, 1.0).total * (6.0 / 5000.0);
    for (std::size_t n : {10001u, 20001u, 40001u}) {
        auto r = mirror_amplitude({}, n, 20.0, 1.0);
        Amplitude cur = r.total * r.spacing;
        double gap = std::abs(cur - prev);
        EXPECT_LT(gap, prev_gap);
        prev_gap = gap;
        prev = cur;
    }
    EXPECT_LT(prev_gap, 1e-3);
}

TEST(Cornu, rejects_degenerate_geometry) {
    EXPECT_THROW(mirror_amplitude({}, 1, 20.0, 1.0), DomainError);
    EXPECT_THROW(mirror_amplitude({-1.0, 1.0, 1.0, 1.0, 3.0, -3.0}, 101, 20.0, 1.0), DomainError);
}

// ---------------------------------------------------------------------------------------

RingParams damped() {
    return RingParams{1.0, kTwoPi, 40, 40, 0.01};
}

TEST(Ring, winding_and_spectral_sums_agree_when_damped) {
    CounterRng rng(3, 0);
    for (int i = 0; i < 20; i++) {
        double a = kTwoPi * rng.uniform(), t = kTwoPi * rng.uniform();
        auto k = ring_propagator(a, t, damped());
        EXPECT_LT(std::abs(k.value - ring_propagator_spectral(a, t, damped())), 1e-10);
        EXPECT_FALSE(k.truncation_warning);
        EXPECT_EQ(k.per_class.size(), 81u);
    }
}

TEST(RingProperty, rotational_invariance) {
    CounterRng rng(4, 0);
    for (int i = 0; i < 20; i++) {
        double a = 3.0 * rng.uniform(), t = 3.0 * rng.uniform(), c = 3.0 * rng.uniform();
        EXPECT_LT(std::abs(ring_propagator(a + c, t + c, damped()).value - ring_propagator(a, t, damped()).value),
                  1e-10);
    }
}

TEST(Ring, real_time_terms_have_constant_modulus_and_warn) {
    RingParams p{1.0, 1.0, 10, 10, 0.0};
    double expected = std::sqrt(1.0 / (kTwoPi * 1.0));
    for (std::int64_t n = -10; n <= 10; n++) {
        EXPECT_NEAR(std::abs(ring_winding_kernel(1.0, 0.3, n, p)), expected, 1e-13);
    }
    EXPECT_TRUE(ring_propagator(1.0, 0.3, p).truncation_warning);
}

TEST(Ring, fixed_momentum_classes) {
    auto r = ring_propagator_fixed_momentum(1.0, 0.3, 2, 3);
    ASSERT_EQ(r.per_class.size(), 7u);
    Amplitude each = std::polar(1.0, 2.0 * 0.7);
    for (const auto &[cls, amp] : r.per_class) {
        EXPECT_LT(std::abs(amp - each), 1e-12) << cls.to_string();
    }
    EXPECT_LT(std::abs(r.value - 7.0 * each), 1e-11);
}

TEST(Ring, rejects_out_of_range_angles_and_params) {
    EXPECT_THROW(ring_propagator(7.0, 0.3, damped()), DomainError);
    EXPECT_THROW(ring_propagator(1.0, -0.1, damped()), DomainError);
    RingParams bad = damped();
    bad.moment = 0.0;
    EXPECT_THROW(ring_propagator(1.0, 0.3, bad), DomainError);
    bad = damped();
    bad.n_cutoff = -1;
    EXPECT_THROW(bad.validate(), DomainError);
}

TEST(Ring, fixed_momentum_zero_and_periodicity) {
    auto zero = ring_propagator_fixed_momentum(1.0, 0.3, 0, 5);
    EXPECT_LT(std::abs(zero.value - Amplitude(11.0, 0.0)), 1e-12);
    for (std::int64_t p : {-2, 1, 3}) {
        auto a = ring_propagator_fixed_momentum(1.0, 0.3, p, 5);
        auto b = ring_propagator_fixed_momentum(1.0 + kTwoPi, 0.3, p, 5);
        auto c = ring_propagator_fixed_momentum(0.6, 0.3, p, 5);
        EXPECT_LT(std::abs(a.value - b.value), 1e-11);
        EXPECT_LT(std::abs(a.value / c.value - std::polar(1.0, static_cast<double>(p) * 0.4)), 1e-12);
    }
}

TEST(Ring, value_is_sum_of_classes) {
    auto r = ring_propagator(2.0, 0.5, damped());
    Amplitude sum = 0.0;
    for (const auto &[cls, amp] : r.per_class) {
        sum += amp;
    }
    EXPECT_LT(std::abs(r.value - sum), 1e-9);
}

TEST(Ring, equal_angles_full_period) {
    RingParams p{1.0, kTwoPi, 40, 40, 0.01};
    EXPECT_LT(std::abs(ring_propagator(1.0, 1.0, p).value - ring_propagator_spectral(1.0, 1.0, p)), 1e-6);
}

TEST(Cornu, reversed_accumulation_keeps_total) {
    auto r = mirror_amplitude({}, 20001, 20.0, 1.0);
    Amplitude backwards = 0.0;
    for (std::size_t k = r.trace.partial_sums.size(); k-- > 0;) {
        backwards += r.trace.term(k);
    }
    EXPECT_LT(std::abs(backwards - r.total), 1e-12 * 20001.0);
}

}  // namespace
}  // namespace pathsum
