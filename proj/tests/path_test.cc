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
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "pathsum/errors.h"
#include "pathsum/parallel.h"
#include "pathsum/path.h"
#include "pathsum/rng.h"

namespace pathsum {
namespace {

std::vector<double> random_walk(CounterRng &rng, std::size_t n, double start, double max_step) {
    std::vector<double> x{start};
    for (std::size_t k = 0; k < n; k++) {
        x.push_back(x.back() + (2.0 * rng.uniform() - 1.0) * max_step);
    }
    return x;
}

TEST(Amplitude, exp_action_is_multiplicative) {
    CounterRng rng(7, 0);
    for (int i = 0; i < 200; i++) {
        ActionValue a{40.0 * rng.uniform() - 20.0};
        ActionValue b{40.0 * rng.uniform() - 20.0};
        EXPECT_LT(std::abs(exp_action(a + b) - exp_action(a) * exp_action(b)), 1e-12);
        EXPECT_NEAR(std::abs(exp_action(a)), 1.0, 1e-15);
    }
}

TEST(Amplitude, exp_action_rejects_non_finite) {
    EXPECT_THROW(exp_action({INFINITY}), DomainError);
    EXPECT_THROW(exp_action({NAN}), DomainError);
}

TEST(Amplitude, inv_sqrt_i_squares_to_minus_i) {
    EXPECT_LT(std::abs(inv_sqrt_i() * inv_sqrt_i() - Amplitude(0.0, -1.0)), 1e-15);
}

TEST(Path, constructor_validates) {
    EXPECT_THROW(Path(Space::Line1D, {0.0}, 0.1), DomainError);
    EXPECT_THROW(Path(Space::Line1D, {0.0, 1.0}, 0.0), DomainError);
    EXPECT_THROW(Path(Space::Line1D, {0.0, NAN}, 0.1), DomainError);
}

TEST(Path, free_action_of_straight_path) {
    // Uniform motion: S = m d^2 / (2T).
    Path p(Space::Line1D, {0.0, 0.25, 0.5, 0.75, 1.0}, 0.25);
    EXPECT_NEAR(free_action(p, 2.0).s_over_hbar, 1.0, 1e-14);
    EXPECT_THROW(free_action(p, 0.0), DomainError);
}

TEST(PathProperty, free_action_time_reversal_and_translation) {
    CounterRng rng(11, 0);
    for (int i = 0; i < 100; i++) {
        Path p(Space::Line1D, random_walk(rng, 10, 3.0 * rng.uniform(), 0.5), 0.1);
        double s = free_action(p, 1.7).s_over_hbar;
        EXPECT_NEAR(free_action(p.reversed(), 1.7).s_over_hbar, s, 1e-12 * (1.0 + s));
        EXPECT_NEAR(free_action(p.translated(5.0 * rng.uniform() - 2.5), 1.7).s_over_hbar, s,
                    1e-11 * (1.0 + s));
    }
}

TEST(Path, winding_number_examples) {
    Path once(Space::Ring, {0.3, 2.3, 4.3, 6.3, 0.3 + kTwoPi + 0.1}, 0.1);
    EXPECT_EQ(winding_number(once), 1);
    EXPECT_EQ(winding_number(once.reversed()), -1);
    Path stay(Space::Ring, {0.3, 1.0, 0.5}, 0.1);
    EXPECT_EQ(winding_number(stay), 0);
    EXPECT_EQ(winding_number(stay, 0.7), 0);
    Path twice_back(Space::Ring, {1.0, -1.0, -3.0, -5.0, -7.0, -9.0, -11.0, 1.0 - 2 * kTwoPi}, 0.1);
    EXPECT_EQ(winding_number(twice_back), -2);
}

TEST(Path, winding_number_rejects_wrapped_and_line) {
    EXPECT_THROW(winding_number(Path(Space::Ring, {0.1, 6.2}, 0.1)), DomainError);
    EXPECT_THROW(winding_number(Path(Space::Ring, {0.0, kPi}, 0.1)), DomainError);
    EXPECT_THROW(winding_number(Path(Space::Line1D, {0.0, 0.1}, 0.1)), DomainError);
}

TEST(PathProperty, winding_is_additive_under_concat) {
    CounterRng rng(13, 0);
    for (int i = 0; i < 200; i++) {
        Path a(Space::Ring, random_walk(rng, 20, kTwoPi * rng.uniform(), 3.0), 0.1);
        auto bx = random_walk(rng, 20, a.back() + kTwoPi * static_cast<double>(rng() % 5) - 2 * kTwoPi, 3.0);
        Path b(Space::Ring, bx, 0.1);
        Path ab = concat(a, b);
        EXPECT_EQ(winding_number(ab), winding_number(a) + winding_number(b));
        EXPECT_EQ(ab.n_slices(), a.n_slices() + b.n_slices());
    }
}

TEST(Path, concat_requires_matching_endpoints) {
    Path a(Space::Ring, {0.0, 1.0}, 0.1);
    EXPECT_THROW(concat(a, Path(Space::Ring, {1.5, 2.0}, 0.1)), DomainError);
    EXPECT_THROW(concat(a, Path(Space::Ring, {1.0, 2.0}, 0.2)), DomainError);
    EXPECT_THROW(concat(a, Path(Space::SO3Axis, {1.0, 2.0}, 0.1)), DomainError);
    EXPECT_NO_THROW(concat(a, Path(Space::Ring, {1.0 - kTwoPi, 2.0 - kTwoPi}, 0.1)));
    Path l(Space::Line1D, {0.0, 1.0}, 0.1);
    EXPECT_THROW(concat(l, Path(Space::Line1D, {1.0 + kTwoPi, 2.0}, 0.1)), DomainError);
}

std::vector<double> ramp(double from, double to, std::size_t n) {
    std::vector<double> x(n + 1);
    for (std::size_t k = 0; k <= n; k++) {
        x[k] = from + (to - from) * static_cast<double>(k) / static_cast<double>(n);
    }
    return x;
}

TEST(Path, so3_classes) {
    Path single(Space::SO3Axis, ramp(0.0, kTwoPi, 8), 0.1);
    EXPECT_EQ(so3_class(single), HomotopyClass::so3(SO3Class::Nontrivial));
    Path twice(Space::SO3Axis, ramp(0.0, 2 * kTwoPi, 16), 0.1);
    EXPECT_EQ(so3_class(twice), HomotopyClass::so3(SO3Class::Trivial));
    EXPECT_EQ(so3_class(concat(single, single)), HomotopyClass::so3(SO3Class::Trivial));
    Path small(Space::SO3Axis, {0.0, 1.0, 0.2}, 0.1);
    EXPECT_EQ(so3_class(small), HomotopyClass::so3(SO3Class::Trivial));
    EXPECT_THROW(so3_class(Path(Space::Ring, {0.0, 0.1}, 0.1)), DomainError);
}

TEST(HomotopyClass, accessors_and_order) {
    auto w = HomotopyClass::winding(-3);
    EXPECT_TRUE(w.is_winding());
    EXPECT_EQ(w.winding_number(), -3);
    EXPECT_THROW(w.so3_class(), DomainError);
    EXPECT_THROW(HomotopyClass::so3(SO3Class::Trivial).winding_number(), DomainError);
    EXPECT_LT(HomotopyClass::winding(-1), HomotopyClass::winding(2));
    EXPECT_EQ(w.to_string(), "-3");
}

TEST(Sampler, lattice_enumeration_counts_and_order) {
    SamplerOptions opt;
    opt.lattice = LatticeSpec{3, 0.1, 0.0};
    auto e = sample_paths(Space::Line1D, {0.0, 1.0}, 3, 1, Generator::LatticeEnumeration, 0, opt);
    ASSERT_EQ(e.size(), 9u);
    // Last interior slice varies fastest.
    EXPECT_NEAR(e.paths()[0].points()[1], 1.0 / 3.0 - 0.1, 1e-15);
    EXPECT_NEAR(e.paths()[0].points()[2], 2.0 / 3.0 - 0.1, 1e-15);
    EXPECT_NEAR(e.paths()[1].points()[2], 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(e.paths()[1].points()[1], 1.0 / 3.0 - 0.1, 1e-15);
    for (const auto &p : e.paths()) {
        EXPECT_EQ(p.front(), 0.0);
        EXPECT_EQ(p.back(), 1.0);
    }
}

TEST(Sampler, lattice_enumeration_cap) {
    SamplerOptions opt;
    opt.lattice = LatticeSpec{11, 0.1, 0.0};
    opt.enumeration_cap = 1000;
    EXPECT_THROW(sample_paths(Space::Line1D, {0.0, 1.0}, 5, 1, Generator::LatticeEnumeration, 0, opt),
                 ResourceError);
    opt.enumeration_cap = 14641;
    EXPECT_EQ(sample_paths(Space::Line1D, {0.0, 1.0}, 5, 1, Generator::LatticeEnumeration, 0, opt).size(),
              14641u);
}

TEST(Sampler, bridge_is_deterministic_and_pinned) {
    auto a = sample_paths(Space::Ring, {0.3, 1.0}, 16, 50, Generator::BrownianBridge, 42);
    auto b = sample_paths(Space::Ring, {0.3, 1.0}, 16, 50, Generator::BrownianBridge, 42);
    auto c = sample_paths(Space::Ring, {0.3, 1.0}, 16, 50, Generator::BrownianBridge, 43);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    for (const auto &p : a.paths()) {
        EXPECT_EQ(p.front(), 0.3);
        EXPECT_EQ(p.back(), 1.0);
        EXPECT_EQ(p.n_slices(), 16u);
    }
}

TEST(Sampler, bridge_with_zero_sigma_is_straight) {
    SamplerOptions opt;
    opt.bridge_sigma = 0.0;
    auto e = sample_paths(Space::Line1D, {0.0, 2.0}, 4, 3, Generator::BrownianBridge, 1, opt);
    for (const auto &p : e.paths()) {
        for (std::size_t k = 0; k <= 4; k++) {
            EXPECT_NEAR(p.points()[k], 0.5 * static_cast<double>(k), 1e-14);
        }
    }
}

TEST(Sampler, fixed_momentum_one_path_per_class) {
    SamplerOptions opt;
    opt.winding_cutoff = 3;
    auto e = sample_paths(Space::Ring, {0.3, 1.0}, 32, 100, Generator::FixedMomentum, 0, opt);
    ASSERT_EQ(e.size(), 7u);
    std::set<std::int64_t> classes;
    for (const auto &p : e.paths()) {
        classes.insert(classify(p).winding_number());
    }
    EXPECT_EQ(classes, (std::set<std::int64_t>{-3, -2, -1, 0, 1, 2, 3}));
    EXPECT_THROW(sample_paths(Space::Line1D, {0.0, 1.0}, 4, 1, Generator::FixedMomentum, 0), DomainError);
    // 3 slices cannot carry two turns without steps of pi or more.
    EXPECT_THROW(sample_paths(Space::Ring, {0.0, 0.0}, 3, 1, Generator::FixedMomentum, 0), DomainError);
}

TEST(Sampler, rejects_bad_arguments) {
    EXPECT_THROW(sample_paths(Space::Line1D, {0.0, 1.0}, 0, 1, Generator::BrownianBridge, 0), DomainError);
    EXPECT_THROW(sample_paths(Space::Line1D, {0.0, 1.0}, 4, 0, Generator::BrownianBridge, 0), DomainError);
    EXPECT_THROW(sample_paths(Space::Line1D, {0.0, NAN}, 4, 1, Generator::BrownianBridge, 0), DomainError);
    EXPECT_THROW(LatticeSpec::window(1.0, 0.0, 0.0), DomainError);
}

TEST(PathEnsemble, validates_shared_endpoints_and_weights) {
    Path a(Space::Line1D, {0.0, 0.5, 1.0}, 0.1);
    Path b(Space::Line1D, {0.0, 0.2, 1.0}, 0.1);
    Path c(Space::Line1D, {0.0, 0.2, 1.1}, 0.1);
    EXPECT_NO_THROW(PathEnsemble({a, b}, std::nullopt, 0, Generator::BrownianBridge));
    EXPECT_THROW(PathEnsemble({a, c}, std::nullopt, 0, Generator::BrownianBridge), DomainError);
    EXPECT_THROW(PathEnsemble({}, std::nullopt, 0, Generator::BrownianBridge), DomainError);
    EXPECT_THROW(PathEnsemble({a, b}, std::vector<double>{1.0}, 0, Generator::BrownianBridge), DomainError);
    EXPECT_THROW(PathEnsemble({a, b}, std::vector<double>{1.0, 0.0}, 0, Generator::BrownianBridge), DomainError);
}

TEST(LatticeSpec, taper_weights_are_smooth_and_positive) {
    auto spec = LatticeSpec::window(2.0, 0.1, 1.0);
    EXPECT_EQ(spec.sites, 41u);
    EXPECT_NEAR(spec.half_extent(), 2.0, 1e-12);
    auto w = spec.weights();
    auto x = spec.offsets();
    for (std::size_t j = 0; j < w.size(); j++) {
        EXPECT_GT(w[j], 0.0);
        EXPECT_LE(w[j], 1.0);
        if (std::abs(x[j]) <= 1.0 + 1e-12) {
            EXPECT_EQ(w[j], 1.0);
        }
        EXPECT_EQ(w[j], w[w.size() - 1 - j]);
    }
    EXPECT_LT(w.front(), 0.1);
}

TEST(Rng, counter_streams_are_order_independent) {
    CounterRng a(5, 9);
    std::vector<std::uint64_t> seq;
    for (int k = 0; k < 10; k++) {
        seq.push_back(a());
    }
    CounterRng b(5, 9);
    for (int k = 9; k >= 0; k--) {
        EXPECT_EQ(b.at(static_cast<std::uint64_t>(k)), seq[static_cast<std::size_t>(k)]);
    }
    EXPECT_NE(CounterRng(5, 10).at(0), seq[0]);
    EXPECT_NE(CounterRng(6, 9).at(0), seq[0]);
}

TEST(Parallel, sum_is_bit_identical_across_thread_counts) {
    auto term = [](std::size_t i) { return std::polar(1.0 / (1.0 + static_cast<double>(i)), 0.37 * i); };
    set_max_threads(1);
    Amplitude one = parallel_sum(100'000, term, 1000);
    set_max_threads(4);
    Amplitude four = parallel_sum(100'000, term, 1000);
    set_max_threads(0);
    EXPECT_EQ(one, four);
}

TEST(Parallel, for_rethrows) {
    set_max_threads(3);
    EXPECT_THROW(parallel_for(100, 10,
                              [](std::size_t b, std::size_t) {
                                  if (b == 50) throw DomainError("boom");
                              }),
                 DomainError);
    set_max_threads(0);
}

}  // namespace
}  // namespace pathsum
