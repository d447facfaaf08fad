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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/gates.hpp"
#include "core/qasm.hpp"
#include "core/rng.hpp"

using namespace qheat;

TEST_CASE("round trip through qasm text preserves the document") {
    const auto params = ExperimentParams::defaults();
    for (auto protocol : {Protocol::qq_initial, Protocol::qq_final, Protocol::tpm}) {
        const auto doc = build_protocol_circuit(params, protocol, 0.8);
        const auto parsed = CircuitDocument::parse_qasm(doc.to_qasm());
        CHECK(parsed.n_qubits == doc.n_qubits);
        CHECK(parsed.n_rounds == doc.n_rounds);
        REQUIRE(parsed.instructions.size() == doc.instructions.size());
        for (std::size_t i = 0; i < doc.instructions.size(); ++i) {
            CHECK(parsed.instructions[i].name == doc.instructions[i].name);
            CHECK(parsed.instructions[i].targets == doc.instructions[i].targets);
            CHECK(parsed.instructions[i].params == doc.instructions[i].params);
        }
    }
}

TEST_CASE("reconstructed unitaries match the intended matrices") {
    const auto params = ExperimentParams::defaults();
    for (auto protocol : {Protocol::qq_initial, Protocol::qq_final, Protocol::tpm}) {
        for (double theta : {0.0, 0.3, M_PI / 2.0, 2.9}) {
            const auto doc = build_protocol_circuit(params, protocol, theta);
            const auto parsed = CircuitDocument::parse_qasm(doc.to_qasm());
            CHECK(reconstruction_error(parsed, params, protocol, theta) < 1e-9);
        }
    }
}

TEST_CASE("reconstruction holds at random parameters") {
    Rng rng(77);
    for (int k = 0; k < 20; ++k) {
        ExperimentParams p = ExperimentParams::defaults();
        p.t_h = rng.uniform() * 3.0;
        p.t_c = p.t_h + rng.uniform() * (3.1 - p.t_h);
        const double theta = rng.uniform() * M_PI;
        const auto doc = build_protocol_circuit(p, Protocol::tpm, theta);
        CHECK(reconstruction_error(doc, p, Protocol::tpm, theta) < 1e-9);
    }
}

TEST_CASE("tpm export contains exactly two measurement rounds on (c, h)") {
    const auto params = ExperimentParams::defaults();
    const auto doc = build_protocol_circuit(params, Protocol::tpm, 1.0);
    CHECK(doc.n_rounds == 2);
    int measures[2] = {0, 0};
    for (const auto &ins : doc.instructions) {
        if (ins.kind != CircuitInstruction::Kind::measure) continue;
        REQUIRE(ins.round >= 0);
        REQUIRE(ins.round <= 1);
        ++measures[ins.round];
        CHECK((ins.targets[0] == 1 || ins.targets[0] == 2));
    }
    CHECK(measures[0] == 2);
    CHECK(measures[1] == 2);
    // mid-circuit: gates appear after the round-0 measurements
    bool seen_round0 = false, gates_after = false;
    for (const auto &ins : doc.instructions) {
        if (ins.kind == CircuitInstruction::Kind::measure && ins.round == 0) seen_round0 = true;
        if (seen_round0 && ins.kind == CircuitInstruction::Kind::gate) gates_after = true;
    }
    CHECK(gates_after);
}

TEST_CASE("zero angles reduce to the identity") {
    ExperimentParams p = ExperimentParams::defaults();
    p.t_c = 0.0;
    p.t_h = 0.0;
    CircuitDocument doc;
    doc.n_qubits = 2;
    // a bare u_theta(0) decomposition reconstructs to the identity
    const auto full = build_protocol_circuit(p, Protocol::qq_final, 0.0);
    const auto segs = reconstruct_segment_unitaries(full);
    REQUIRE(segs.size() == 1);
    const auto want = intended_segment_unitaries(p, Protocol::qq_final, 0.0);
    CHECK((segs[0] - want[0]).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("emitted text is a plain openqasm-3 subset") {
    const auto params = ExperimentParams::defaults();
    const auto text = build_protocol_circuit(params, Protocol::tpm, 0.5).to_qasm();
    CHECK(text.rfind("OPENQASM 3.0;\n", 0) == 0);
    CHECK(text.find("qubit[4] q;") != std::string::npos);
    CHECK(text.find("bit[4] r0;") != std::string::npos);
    CHECK(text.find("bit[4] r1;") != std::string::npos);
    CHECK(text.find("= measure q[1];") != std::string::npos);
    CHECK(text.find("= measure q[2];") != std::string::npos);
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(CircuitDocument::parse_qasm("h q[0];"), std::invalid_argument);
    CHECK_THROWS_AS(CircuitDocument::parse_qasm("qubit[2] q;\nh;"), std::invalid_argument);
    const auto doc = CircuitDocument::parse_qasm("qubit[2] q;\nfrobnicate q[0];");
    CHECK_THROWS_AS(reconstruct_segment_unitaries(doc), std::invalid_argument);
}

TEST_CASE("parser accepts comments and blank lines") {
    const auto doc = CircuitDocument::parse_qasm("// header\nOPENQASM 3.0;\n\nqubit[2] q;\n"
                                                 "h q[0]; // comment\nrz(0.5) q[1];\n");
    REQUIRE(doc.instructions.size() == 2);
    CHECK(doc.instructions[1].params[0] == 0.5);
}
