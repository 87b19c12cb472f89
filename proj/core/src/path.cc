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
#include "pathsum/path.h"

#include <cmath>

#include "pathsum/errors.h"

namespace pathsum {

std::string to_string(Space space) {
    switch (space) {
        case Space::Line1D:
            return "line1d";
        case Space::Ring:
            return "ring";
        case Space::SO3Axis:
            return "so3axis";
    }
    return "?";
}

Path::Path(Space space, std::vector<double> points, double dt)
    : space_(space), points_(std::move(points)), dt_(dt) {
    if (points_.size() < 2) {
        throw DomainError("Path: need at least 2 points, got " + std::to_string(points_.size()));
    }
    if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
        throw DomainError("Path: dt must be positive and finite");
    }
    for (double p : points_) {
        if (!std::isfinite(p)) {
            throw DomainError("Path: non-finite coordinate");
        }
    }
}

Path Path::reversed() const {
    return Path(space_, std::vector<double>(points_.rbegin(), points_.rend()), dt_);
}

Path Path::translated(double offset) const {
    std::vector<double> shifted(points_);
    for (double &p : shifted) {
        p += offset;
    }
    return Path(space_, std::move(shifted), dt_);
}

Path concat(const Path &a, const Path &b) {
    if (a.space() != b.space()) {
        throw DomainError("concat: paths live in different spaces");
    }
    if (std::abs(a.dt() - b.dt()) > 1e-15 * a.dt()) {
        throw DomainError("concat: time slices differ");
    }
    double gap = a.back() - b.front();
    if (a.space() == Space::Line1D) {
        if (std::abs(gap) > 1e-12) {
            throw DomainError("concat: second path does not start where the first ends");
        }
    } else {
        double turns = std::round(gap / kTwoPi);
        if (std::abs(gap - turns * kTwoPi) > 1e-9) {
            throw DomainError("concat: second path does not start where the first ends (mod 2pi)");
        }
    }
    std::vector<double> points(a.points());
    points.reserve(a.points().size() + b.points().size() - 1);
    for (std::size_t k = 1; k < b.points().size(); k++) {
        points.push_back(b.points()[k] + gap);
    }
    return Path(a.space(), std::move(points), a.dt());
}

std::int64_t HomotopyClass::winding_number() const {
    if (!is_winding()) {
        throw DomainError("HomotopyClass: not a winding class");
    }
    return std::get<std::int64_t>(kind_);
}

SO3Class HomotopyClass::so3_class() const {
    if (is_winding()) {
        throw DomainError("HomotopyClass: not an SO(3) class");
    }
    return std::get<SO3Class>(kind_);
}

std::string HomotopyClass::to_string() const {
    if (is_winding()) {
        return std::to_string(winding_number());
    }
    return so3_class() == SO3Class::Trivial ? "trivial" : "nontrivial";
}

ActionValue free_action(const Path &path, double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw DomainError("free_action: mass must be positive");
    }
    const auto &x = path.points();
    double sum_sq = 0.0;
    for (std::size_t k = 0; k + 1 < x.size(); k++) {
        double dx = x[k + 1] - x[k];
        sum_sq += dx * dx;
    }
    return {0.5 * mass * sum_sq / path.dt()};
}

namespace {

void require_unwrapped(const Path &path, const char *op) {
    if (path.space() == Space::Line1D) {
        throw DomainError(std::string(op) + ": path is not angular (Line1D)");
    }
    const auto &x = path.points();
    for (std::size_t k = 0; k + 1 < x.size(); k++) {
        if (std::abs(x[k + 1] - x[k]) >= kPi) {
            throw DomainError(std::string(op) + ": step " + std::to_string(k) +
                              " has |dtheta| >= pi; coordinates look wrapped or under-resolved");
        }
    }
}

std::int64_t floor_turns(double x) {
    return static_cast<std::int64_t>(std::floor(x / kTwoPi));
}

}  // namespace

std::int64_t winding_number(const Path &path, double reference) {
    require_unwrapped(path, "winding_number");
    // Each crossing of reference + 2 pi k moves floor((x - ref) / 2pi) by one in the
    // direction of travel; the per-step counts telescope to the endpoint difference.
    return floor_turns(path.back() - reference) - floor_turns(path.front() - reference);
}

HomotopyClass so3_class(const Path &path) {
    if (path.space() != Space::SO3Axis) {
        throw DomainError("so3_class: path is not on the SO(3) y-axis");
    }
    require_unwrapped(path, "so3_class");
    std::int64_t passages = floor_turns(path.back() + kPi) - floor_turns(path.front() + kPi);
    return HomotopyClass::so3(passages % 2 == 0 ? SO3Class::Trivial : SO3Class::Nontrivial);
}

HomotopyClass classify(const Path &path) {
    if (path.space() == Space::Line1D) {
        return HomotopyClass::winding(0);
    }
    return HomotopyClass::winding(winding_number(path, 0.0));
}

std::string to_string(Generator g) {
    switch (g) {
        case Generator::LatticeEnumeration:
            return "lattice";
        case Generator::BrownianBridge:
            return "bridge";
        case Generator::FixedMomentum:
            return "fixed_momentum";
    }
    return "?";
}

PathEnsemble::PathEnsemble(std::vector<Path> paths, std::optional<std::vector<double>> weights,
                           std::uint64_t seed, Generator generator)
    : paths_(std::move(paths)), weights_(std::move(weights)), seed_(seed), generator_(generator) {
    if (paths_.empty()) {
        throw DomainError("PathEnsemble: empty");
    }
    const Path &first = paths_.front();
    for (const Path &p : paths_) {
        if (p.space() != first.space() || p.n_slices() != first.n_slices()) {
            throw DomainError("PathEnsemble: paths differ in space or slice count");
        }
        if (p.front() != first.front()) {
            throw DomainError("PathEnsemble: paths do not share a start point");
        }
        double gap = p.back() - first.back();
        if (first.space() != Space::Line1D) {
            gap -= std::round(gap / kTwoPi) * kTwoPi;
        }
        if (std::abs(gap) > 1e-9) {
            throw DomainError("PathEnsemble: paths do not share an end point");
        }
    }
    if (weights_) {
        if (weights_->size() != paths_.size()) {
            throw DomainError("PathEnsemble: weight count does not match path count");
        }
        for (double w : *weights_) {
            if (!(w > 0.0) || !std::isfinite(w)) {
                throw DomainError("PathEnsemble: weights must be positive");
            }
        }
    }
}

}  // namespace pathsum
