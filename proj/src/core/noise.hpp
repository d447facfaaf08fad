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
 * @file noise.hpp
 * Device-level noise models: a coherence shift zeta on the eta entry of
 * the prepared state, a fixed population bias delta_{c,h} * sigma_z on the
 * single-qubit marginals, and a shot-level misread probability eps (reading
 * |1> as |0>). The documented mapping between the two readout realizations is
 * delta = eps * P(qubit = 1) at the pre-measurement state.
 */
#pragma once

#include "core/state.hpp"

namespace qheat {

struct NoiseModel {
    double zeta = 0.0;
    double delta_c = 0.0;
    double delta_h = 0.0;
    double eps_read_c = 0.0;
    double eps_read_h = 0.0;

    // applies_to flags
    bool prep_coherence = true;
    bool midcircuit_readout = true;
    bool final_readout = true;

    bool is_trivial() const {
        return zeta == 0.0 && delta_c == 0.0 && delta_h == 0.0 && eps_read_c == 0.0 &&
               eps_read_h == 0.0;
    }

    /// Range checks: |zeta| <= 1/2, eps in [0, 1].
    void validate() const;
};

enum class NoiseStage { prep_coherence, midcircuit_readout, final_readout };

/// prep_coherence: eta -> eta + zeta on the {|01>, |10>} off-diagonal pair of
/// a two-qubit density matrix. Readout stages: per-qubit sigma_z population
/// shift; on a two-qubit state the result is the product of the shifted
/// marginals. Rejects shifts that break positive semidefiniteness.
QuantumState apply_noise_to_state(const QuantumState &rho, const NoiseModel &noise,
                                  NoiseStage stage);

} // namespace qheat
