// Copyright 2026 The qheat developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file kdq.hpp
 * Real part of the Kirkwood-Dirac quasiprobability (the Margenau-Hill
 * distribution) of the heat-exchange process, its negativity, and the
 * reconstructed heat flow.
 */
#pragma once

#include <array>

#include "core/heatflow.hpp"
#include "core/state.hpp"

namespace qheat {

/// 16-entry real table over initial pair (i_c, i_h) and final pair (f_c, f_h).
/// Flat row-major layout: row index i = 2*i_c + i_h, column index
/// f = 2*f_c + f_h; entry(i, f) = entries[4*i + f]. Entries may be negative.
struct KdqDistribution {
    std::array<double, 16> entries{};
    double theta = 0.0;

    double entry(int i, int f) const { return entries[static_cast<std::size_t>(4 * i + f)]; }
    double sum() const;
    /// Marginal over finals at fixed initial pair; equals diag(rho)_i.
    double initial_marginal(int i) const;
};

/// entries[i][f] = Re Tr[U_theta^dag Pi^f U_theta Pi^i rho] with projectors in
/// the computational (energy) basis.
KdqDistribution kdq_distribution(const QuantumState &rho, double theta);

/// Energy-difference sums over the table; equals q_quantum on the same state.
HeatPair kdq_heat(const KdqDistribution &dist, double delta);

/// Sum of |negative entries|.
double negativity(const KdqDistribution &dist);

} // namespace qheat
