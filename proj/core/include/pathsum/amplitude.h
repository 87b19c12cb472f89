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

#ifndef PATHSUM_AMPLITUDE_H
#define PATHSUM_AMPLITUDE_H

#include <complex>
#include <numbers>

namespace pathsum {

/// Complex propagator value or exponentiated-action term. Dimensionless.
using Amplitude = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// An action expressed in units of hbar (hbar = 1 throughout).
struct ActionValue {
    double s_over_hbar = 0.0;

    friend ActionValue operator+(ActionValue a, ActionValue b) {
        return {a.s_over_hbar + b.s_over_hbar};
    }
    friend bool operator==(ActionValue, ActionValue) = default;
};

/// exp(i S / hbar). Throws DomainError for non-finite actions.
Amplitude exp_action(ActionValue s);

/// sqrt(1/i) on the branch e^{-i pi/4}.
inline Amplitude inv_sqrt_i() {
    return std::polar(1.0, -kPi / 4.0);
}

}  // namespace pathsum

#endif
