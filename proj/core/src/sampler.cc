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
#include <random>

#include "pathsum/errors.h"
#include "pathsum/path.h"
#include "pathsum/rng.h"

namespace pathsum {

namespace {

// Smooth step: 1 for s <= 0, 0 for s >= 1, C-infinity in between.
double smooth_rolloff(double s) {
    if (s <= 0.0) {
        return 1.0;
    }
    if (s >= 1.0) {
        return 0.0;
    }
    auto bump = [](double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; };
    double a = bump(1.0 - s);
    return a / (a + bump(s));
}

std::vector<double> straight_line(double start, double end, std::size_t n_slices) {
    std::vector<double> x(n_slices + 1);
    for (std::size_t k = 0; k <= n_slices; k++) {
        x[k] = start + (end - start) * static_cast<double>(k) / static_cast<double>(n_slices);
    }
    x.back() = end;
    return x;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < exponent; i++) {
        if (base != 0 && total > cap / base) {
            return cap + 1;
        }
        total *= base;
    }
    return total;
}

}  // namespace

LatticeSpec LatticeSpec::window(double half_width, double spacing, double taper_width) {
    if (!(spacing > 0.0) || !(half_width >= 0.0) || !(taper_width >= 0.0)) {
        throw DomainError("LatticeSpec: spacing must be positive, widths non-negative");
    }
    auto half_sites = static_cast<std::size_t>(std::llround(half_width / spacing));
    return LatticeSpec{2 * half_sites + 1, spacing, taper_width};
}

std::vector<double> LatticeSpec::offsets() const {
    std::vector<double> out(sites);
    double centre = 0.5 * static_cast<double>(sites - 1);
    for (std::size_t j = 0; j < sites; j++) {
        out[j] = (static_cast<double>(j) - centre) * spacing;
    }
    return out;
}

std::vector<double> LatticeSpec::weights() const {
    std::vector<double> w(sites, 1.0);
    if (taper_width <= 0.0) {
        return w;
    }
    double core = half_extent() - taper_width;
    auto off = offsets();
    for (std::size_t j = 0; j < sites; j++) {
        // Roll-off ends one spacing beyond the last site so edge weights stay positive.
        w[j] = smooth_rolloff((std::abs(off[j]) - core) / (taper_width + spacing));
    }
    return w;
}

PathEnsemble sample_paths(Space space, Endpoints endpoints, std::size_t n_slices,
                          std::size_t n_paths, Generator generator, std::uint64_t seed,
                          const SamplerOptions &options) {
    if (n_slices < 1) {
        throw DomainError("sample_paths: n_slices must be >= 1");
    }
    if (n_paths < 1) {
        throw DomainError("sample_paths: n_paths must be >= 1");
    }
    if (!std::isfinite(endpoints.start) || !std::isfinite(endpoints.end)) {
        throw DomainError("sample_paths: endpoints must be finite");
    }
    if (!(options.t_total > 0.0) || !(options.mass > 0.0)) {
        throw DomainError("sample_paths: t_total and mass must be positive");
    }
    const double dt = options.t_total / static_cast<double>(n_slices);
    const auto line = straight_line(endpoints.start, endpoints.end, n_slices);

    switch (generator) {
        case Generator::LatticeEnumeration: {
            const LatticeSpec &lat = options.lattice;
            if (lat.sites < 1 || !(lat.spacing > 0.0)) {
                throw DomainError("sample_paths: lattice needs >= 1 site and positive spacing");
            }
            const std::size_t interior = n_slices - 1;
            std::uint64_t count = checked_power(lat.sites, interior, options.enumeration_cap);
            if (count > options.enumeration_cap) {
                throw ResourceError("sample_paths: lattice enumeration of " +
                                        std::to_string(lat.sites) + "^" + std::to_string(interior) +
                                        " paths exceeds the enumeration cap",
                                    options.enumeration_cap);
            }
            const auto offsets = lat.offsets();
            const auto site_w = lat.weights();
            const bool tapered = lat.taper_width > 0.0;
            std::vector<Path> paths;
            std::vector<double> weights;
            paths.reserve(count);
            std::vector<std::size_t> digit(interior, 0);
            for (std::uint64_t k = 0; k < count; k++) {
                std::vector<double> x(line);
                double w = 1.0;
                for (std::size_t j = 0; j < interior; j++) {
                    x[j + 1] += offsets[digit[j]];
                    w *= site_w[digit[j]];
                }
                paths.emplace_back(space, std::move(x), dt);
                weights.push_back(w);
                // Odometer increment, last interior slice fastest.
                for (std::size_t j = interior; j-- > 0;) {
                    if (++digit[j] < lat.sites) {
                        break;
                    }
                    digit[j] = 0;
                }
            }
            std::optional<std::vector<double>> w;
            if (tapered) {
                w = std::move(weights);
            }
            return PathEnsemble(std::move(paths), std::move(w), seed, generator);
        }
        case Generator::BrownianBridge: {
            const double sigma = options.bridge_sigma.value_or(std::sqrt(dt / options.mass));
            if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
                throw DomainError("sample_paths: bridge sigma must be finite and non-negative");
            }
            std::vector<Path> paths;
            paths.reserve(n_paths);
            for (std::size_t i = 0; i < n_paths; i++) {
                CounterRng rng(seed, i);
                std::normal_distribution<double> normal(0.0, 1.0);
                std::vector<double> x(n_slices + 1);
                x[0] = endpoints.start;
                for (std::size_t k = 1; k < n_slices; k++) {
                    double remaining = static_cast<double>(n_slices - k + 1);
                    double mean = x[k - 1] + (endpoints.end - x[k - 1]) / remaining;
                    double sd = sigma * std::sqrt((remaining - 1.0) / remaining);
                    x[k] = mean + sd * normal(rng);
                }
                x[n_slices] = endpoints.end;
                paths.emplace_back(space, std::move(x), dt);
            }
            return PathEnsemble(std::move(paths), std::nullopt, seed, generator);
        }
        case Generator::FixedMomentum: {
            if (space == Space::Line1D) {
                throw DomainError("sample_paths: FixedMomentum needs an angular space");
            }
            if (options.winding_cutoff < 0) {
                throw DomainError("sample_paths: winding_cutoff must be >= 0");
            }
            std::vector<Path> paths;
            for (std::int64_t n = -options.winding_cutoff; n <= options.winding_cutoff; n++) {
                double target = endpoints.end + kTwoPi * static_cast<double>(n);
                double step = (target - endpoints.start) / static_cast<double>(n_slices);
                if (std::abs(step) >= kPi) {
                    throw DomainError("sample_paths: n_slices=" + std::to_string(n_slices) +
                                      " cannot resolve winding class " + std::to_string(n) +
                                      " (step >= pi)");
                }
                paths.emplace_back(space, straight_line(endpoints.start, target, n_slices), dt);
            }
            return PathEnsemble(std::move(paths), std::nullopt, seed, generator);
        }
    }
    throw DomainError("sample_paths: unknown generator");
}

}  // namespace pathsum
