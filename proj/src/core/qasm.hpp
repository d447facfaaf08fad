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
 * @file qasm.hpp
 * Circuit documents for the three protocol circuits and their export to a
 * minimal OpenQASM-3 subset (qubit/bit declarations, named gates with float
 * parameters, measure statements; no includes, no classical control flow).
 *
 * The two-qubit interactions are decomposed into {h, s, sdg, rz, cx}; the
 * export contract is matrix equivalence of each unitary segment within 1e-9,
 * checked by reconstruct_segment_unitaries().
 */
#pragma once

#include <string>
#include <vector>

#include "core/heatflow.hpp"
#include "core/state.hpp"

namespace qheat {

struct CircuitInstruction {
    enum class Kind { gate, measure } kind = Kind::gate;
    std::string name;           // gate name, empty for measure
    std::vector<double> params; // gate parameters
    std::vector<int> targets;   // qubits
    int round = 0;              // measurement round (measure only)
};

struct CircuitDocument {
    int n_qubits = 0;
    int n_rounds = 0;
    std::vector<CircuitInstruction> instructions;

    std::string to_qasm() const;
    static CircuitDocument parse_qasm(const std::string &text);
};

enum class Protocol { qq_initial, qq_final, tpm };

const char *protocol_name(Protocol p);

/// The protocol circuit on 4 qubits (register order: ancilla 1, c, h,
/// ancilla 2) with the partial-swap and interaction gates decomposed into
/// primitive gates.
CircuitDocument build_protocol_circuit(const ExperimentParams &params, Protocol protocol,
                                       double theta);

/// Multiplies the emitted gate stream back into one matrix per unitary
/// segment (gates between measurement rounds).
std::vector<Matrix> reconstruct_segment_unitaries(const CircuitDocument &doc);

/// Ideal matrices the exported segments must reproduce.
std::vector<Matrix> intended_segment_unitaries(const ExperimentParams &params, Protocol protocol,
                                               double theta);

/// Largest absolute deviation between reconstructed and intended segments.
double reconstruction_error(const CircuitDocument &doc, const ExperimentParams &params,
                            Protocol protocol, double theta);

} // namespace qheat
