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
#ifndef PATHSUM_PATH_H
#define PATHSUM_PATH_H

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pathsum/amplitude.h"

namespace pathsum {

enum class Space { Line1D, Ring, SO3Axis };

std::string to_string(Space space);

/// A time-sliced trajectory. On Ring and SO3Axis the coordinates are unwrapped angles
/// (cumulative, not reduced mod 2pi), so winding numbers are exact integers.
/// Immutable after construction.
class Path {
   public:
    Path(Space space, std::vector<double> points, double dt);

    Space space() const {
        return space_;
    }
    const std::vector<double> &points() const {
        return points_;
    }
    double dt() const {
        return dt_;
    }
    std::size_t n_slices() const {
        return points_.size() - 1;
    }
    double front() const {
        return points_.front();
    }
    double back() const {
        return points_.back();
    }

    /// The same trajectory traversed backwards in time.
    Path reversed() const;
    /// Every coordinate shifted by offset.
    Path translated(double offset) const;

    friend bool operator==(const Path &, const Path &) = default;

   private:
    Space space_;
    std::vector<double> points_;
    double dt_;
};

/// Concatenation: b is shifted so that it starts where a ends. On Ring/SO3Axis the
/// start of b must agree with the end of a modulo 2pi; on Line1D exactly (within 1e-12).
Path concat(const Path &a, const Path &b);

enum class SO3Class { Trivial, Nontrivial };

/// Winding number on the ring or y-axis of the SO(3) ball, or one of the two SO(3) classes.
class HomotopyClass {
   public:
    static HomotopyClass winding(std::int64_t n) {
        return HomotopyClass(n);
    }
    static HomotopyClass so3(SO3Class c) {
        return HomotopyClass(c);
    }

    bool is_winding() const {
        return std::holds_alternative<std::int64_t>(kind_);
    }
    std::int64_t winding_number() const;
    SO3Class so3_class() const;

    std::string to_string() const;

    friend auto operator<=>(const HomotopyClass &, const HomotopyClass &) = default;
    friend bool operator==(const HomotopyClass &, const HomotopyClass &) = default;

   private:
    explicit HomotopyClass(std::int64_t n) : kind_(n) {
    }
    explicit HomotopyClass(SO3Class c) : kind_(c) {
    }
    std::variant<std::int64_t, SO3Class> kind_;
};

/// Discretized kinetic action sum_k (m/2)((x_{k+1}-x_k)/dt)^2 dt, in units of hbar.
/// On Ring/SO3Axis, mass is the moment M R^2 and coordinates are angles.
ActionValue free_action(const Path &path, double mass);

/// Counterclockwise minus clockwise passes of reference (mod 2pi) along an unwrapped
/// angular path. Throws DomainError on Line1D or when a step of |dtheta| >= pi makes the
/// representation ambiguous (looks wrapped).
std::int64_t winding_number(const Path &path, double reference = 0.0);

/// Parity of passages through the surface of the radius-pi ball along the y-axis:
/// nontrivial iff the unwrapped rotation crosses odd multiples of pi an odd number of times.
HomotopyClass so3_class(const Path &path);

enum class Generator { LatticeEnumeration, BrownianBridge, FixedMomentum };

std::string to_string(Generator g);

/// Coordinate lattice for each interior time slice, centred on the straight path between
/// the endpoints. With taper_width > 0 the outermost taper_width of the window carries a
/// smooth (C-infinity) weight rolling off from 1 towards 0; every site keeps a positive weight.
struct LatticeSpec {
    std::size_t sites = 3;
    double spacing = 0.1;
    double taper_width = 0.0;

    /// Lattice with half-extent half_width (rounded to whole spacings).
    static LatticeSpec window(double half_width, double spacing, double taper_width);

    double half_extent() const {
        return 0.5 * static_cast<double>(sites - 1) * spacing;
    }
    /// Site offsets from the slice centre, ascending.
    std::vector<double> offsets() const;
    /// Per-site measure weights matching offsets().
    std::vector<double> weights() const;
};

struct SamplerOptions {
    double t_total = 1.0;
    /// Mass (Line1D) or moment M R^2 (Ring/SO3Axis); sets the default bridge width.
    double mass = 1.0;
    /// Interior-point standard deviation per slice; default sqrt(dt/mass).
    std::optional<double> bridge_sigma;
    LatticeSpec lattice;
    /// FixedMomentum produces winding classes -winding_cutoff..winding_cutoff.
    std::int64_t winding_cutoff = 2;
    std::uint64_t enumeration_cap = 10'000'000;
};

/// A set of paths sharing space, endpoints and slice count: the shadow stream.
class PathEnsemble {
   public:
    PathEnsemble(std::vector<Path> paths, std::optional<std::vector<double>> weights,
                 std::uint64_t seed, Generator generator);

    const std::vector<Path> &paths() const {
        return paths_;
    }
    const std::optional<std::vector<double>> &weights() const {
        return weights_;
    }
    double weight(std::size_t i) const {
        return weights_ ? (*weights_)[i] : 1.0;
    }
    std::size_t size() const {
        return paths_.size();
    }
    Space space() const {
        return paths_.front().space();
    }
    std::uint64_t seed() const {
        return seed_;
    }
    Generator generator() const {
        return generator_;
    }

    friend bool operator==(const PathEnsemble &, const PathEnsemble &) = default;

   private:
    std::vector<Path> paths_;
    std::optional<std::vector<double>> weights_;
    std::uint64_t seed_;
    Generator generator_;
};

struct Endpoints {
    double start = 0.0;
    double end = 0.0;
};

/// Deterministic path generation. Pure function of all arguments.
///  - LatticeEnumeration: every path through options.lattice (sites^(n_slices-1) paths);
///    n_paths is ignored. Throws ResourceError above options.enumeration_cap.
///  - BrownianBridge: n_paths bridges pinned at both endpoints, seeded per path.
///  - FixedMomentum: one constant-velocity representative per winding class in
///    [-winding_cutoff, winding_cutoff] from start to end + 2 pi n (Ring/SO3Axis only).
PathEnsemble sample_paths(Space space, Endpoints endpoints, std::size_t n_slices,
                          std::size_t n_paths, Generator generator, std::uint64_t seed,
                          const SamplerOptions &options = {});

/// Homotopy label used throughout: winding number about 0 on Ring/SO3Axis, 0 on Line1D.
HomotopyClass classify(const Path &path);

}  // namespace pathsum

#endif
