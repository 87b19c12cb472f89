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
#ifndef PATHSUM_BELL_H
#define PATHSUM_BELL_H

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pathsum/entanglement.h"

namespace pathsum {

using Correlation = std::function<double(double a, double b)>;

/// S = E(a,b) - E(a,b') + E(a',b) + E(a',b'). Throws DomainError if any E leaves [-1, 1].
double chsh_value(const Correlation &e, double a, double a_prime, double b, double b_prime);

/// A deterministic local strategy: one +-1 outcome per measurement setting on each side.
struct LHVStrategy {
    std::vector<int> left;
    std::vector<int> right;

    friend bool operator==(const LHVStrategy &, const LHVStrategy &) = default;
};

/// coefficients[i][j] multiplies E(i, j) = left[i] * right[j].
using CoefficientTable = std::vector<std::vector<double>>;

/// The CHSH table for settings (a, a') x (b, b').
CoefficientTable chsh_table();

struct LHVMaximum {
    double max_value = 0.0;
    std::vector<LHVStrategy> argmax;
    std::size_t n_strategies = 0;
};

/// Exhaustive maximum of sum_ij c_ij left[i] right[j] over all 2^(nL+nR) deterministic
/// strategies. At most 4 settings per side (ResourceError otherwise).
LHVMaximum lhv_exhaustive_max(std::size_t n_left_settings, std::size_t n_right_settings,
                              const CoefficientTable &functional);

/// Elements of reality m[particle][axis], particle 0..2, axis 0 = x, 1 = y.
struct GHZAssignment {
    std::array<std::array<int, 2>, 3> m{};
};

inline const std::array<std::string, 4> kGhzLabels{"xyy", "yxy", "yyx", "xxx"};

/// Expectation values of the four product observables in (|uuu> - |ddd>)/sqrt2,
/// from an explicit 8-dimensional state vector and 8x8 Kronecker products.
std::map<std::string, double> ghz_quantum_products();

/// Norm of the GHZ state vector used above.
double ghz_state_norm();

/// The four products for one assignment, ordered as kGhzLabels.
std::array<int, 4> ghz_assignment_products(const GHZAssignment &assignment);

struct MerminReport {
    std::size_t n_assignments = 0;
    /// Assignments reproducing the quantum pattern (+1, +1, +1, -1).
    std::size_t quantum_pattern_matches = 0;
    std::size_t all_plus_matches = 0;
    /// (xyy)(yxy)(yyx) == xxx for every assignment.
    bool forcing_identity_holds = false;
    /// Count of assignments per product pattern, keyed "+++-" etc.
    std::map<std::string, std::size_t> pattern_counts;
};

MerminReport mermin_assignment_search();

/// JointDistributions indexed [alpha index][beta index].
struct DistributionGrid {
    std::vector<double> alphas;
    std::vector<double> betas;
    std::vector<std::vector<JointDistribution>> joint;
};

/// Interferometer distributions for the congruent construction on the grid.
DistributionGrid interferometer_grid(const std::vector<double> &alphas, const std::vector<double> &betas);

/// max over the grid of |marginal(alpha; beta1) - marginal(alpha; beta2)| for the left side
/// and the symmetric quantity for the right side.
double no_signaling_audit(const DistributionGrid &grid);

struct BellReport {
    double chsh_quantum = 0.0;
    double chsh_lhv_max = 0.0;
    std::map<std::string, double> ghz_products;
    std::size_t mermin_match_count = 0;
    double no_signaling_max_deviation = 0.0;
};

/// CHSH at (0, pi/2, pi/4, 3pi/4) with the singlet correlation, the LHV bound, GHZ products,
/// Mermin search, and the no-signaling audit of the 25 x 25 interferometer grid.
BellReport bell_report();

}  // namespace pathsum

#endif
