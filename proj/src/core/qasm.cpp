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

#include "core/qasm.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "core/gates.hpp"

namespace qheat {

namespace {

enum class Axis { x, y };

void push_gate(CircuitDocument &doc, const std::string &name, std::vector<double> params,
               std::vector<int> targets) {
    CircuitInstruction ins;
    ins.kind = CircuitInstruction::Kind::gate;
    ins.name = name;
    ins.params = std::move(params);
    ins.targets = std::move(targets);
    doc.instructions.push_back(std::move(ins));
}

// exp(-i alpha/2 P_a P_b) for P in {X, Y}, via basis change onto ZZ and the
// cx-rz-cx core.
void push_two_pauli_rotation(CircuitDocument &doc, double alpha, Axis pa, int a, Axis pb, int b) {
    auto pre = [&](Axis p, int q) {
        if (p == Axis::x) {
            push_gate(doc, "h", {}, {q});
        } else {
            push_gate(doc, "sdg", {}, {q});
            push_gate(doc, "h", {}, {q});
        }
    };
    auto post = [&](Axis p, int q) {
        if (p == Axis::x) {
            push_gate(doc, "h", {}, {q});
        } else {
            push_gate(doc, "h", {}, {q});
            push_gate(doc, "s", {}, {q});
        }
    };
    pre(pa, a);
    pre(pb, b);
    push_gate(doc, "cx", {}, {a, b});
    push_gate(doc, "rz", {alpha}, {b});
    push_gate(doc, "cx", {}, {a, b});
    post(pa, a);
    post(pb, b);
}

// u_xy(t) = exp(+i t/4 (XX + YY))
void push_u_xy(CircuitDocument &doc, double t, int a, int b) {
    push_two_pauli_rotation(doc, -t / 2.0, Axis::x, a, Axis::x, b);
    push_two_pauli_rotation(doc, -t / 2.0, Axis::y, a, Axis::y, b);
}

// u_theta(theta) = exp(-i theta (Y_a X_b - X_a Y_b) / 2)
void push_u_theta(CircuitDocument &doc, double theta, int a, int b) {
    push_two_pauli_rotation(doc, theta, Axis::y, a, Axis::x, b);
    push_two_pauli_rotation(doc, -theta, Axis::x, a, Axis::y, b);
}

void push_measure_round(CircuitDocument &doc, const std::vector<int> &qubits, int round) {
    for (int q : qubits) {
        CircuitInstruction ins;
        ins.kind = CircuitInstruction::Kind::measure;
        ins.targets = {q};
        ins.round = round;
        doc.instructions.push_back(std::move(ins));
    }
    doc.n_rounds = std::max(doc.n_rounds, round + 1);
}

void push_preparation(CircuitDocument &doc, const ExperimentParams &p) {
    push_gate(doc, "x", {}, {1});
    push_gate(doc, "x", {}, {2});
    push_gate(doc, "h", {}, {1});
    push_gate(doc, "cx", {}, {1, 2});
    push_u_xy(doc, p.t_c, 0, 1);
    push_u_xy(doc, p.t_h, 3, 2);
}

GateOp gate_from_instruction(const CircuitInstruction &ins) {
    const auto need = [&](std::size_t n_params, std::size_t n_targets) {
        if (ins.params.size() != n_params || ins.targets.size() != n_targets)
            throw std::invalid_argument("gate '" + ins.name + "' has wrong arity");
    };
    if (ins.name == "x") {
        need(0, 1);
        return pauli_x(ins.targets[0]);
    }
    if (ins.name == "h") {
        need(0, 1);
        return hadamard(ins.targets[0]);
    }
    if (ins.name == "s") {
        need(0, 1);
        return phase_s(ins.targets[0]);
    }
    if (ins.name == "sdg") {
        need(0, 1);
        return phase_sdg(ins.targets[0]);
    }
    if (ins.name == "rz") {
        need(1, 1);
        return rot_z(ins.params[0], ins.targets[0]);
    }
    if (ins.name == "ry") {
        need(1, 1);
        return rot_y(ins.params[0], ins.targets[0]);
    }
    if (ins.name == "cx") {
        need(0, 2);
        return cnot(ins.targets[0], ins.targets[1]);
    }
    throw std::invalid_argument("unknown gate '" + ins.name + "'");
}

} // namespace

const char *protocol_name(Protocol p) {
    switch (p) {
    case Protocol::qq_initial: return "qq_initial";
    case Protocol::qq_final: return "qq_final";
    case Protocol::tpm: return "tpm";
    }
    return "?";
}

CircuitDocument build_protocol_circuit(const ExperimentParams &params, Protocol protocol,
                                       double theta) {
    params.validate();
    CircuitDocument doc;
    doc.n_qubits = 4;
    push_preparation(doc, params);
    switch (protocol) {
    case Protocol::qq_initial:
        push_measure_round(doc, {1, 2}, 0);
        break;
    case Protocol::qq_final:
        push_u_theta(doc, theta, 1, 2);
        push_measure_round(doc, {1, 2}, 0);
        break;
    case Protocol::tpm:
        push_measure_round(doc, {1, 2}, 0);
        push_u_theta(doc, theta, 1, 2);
        push_measure_round(doc, {1, 2}, 1);
        break;
    }
    return doc;
}

std::string CircuitDocument::to_qasm() const {
    std::string out = "OPENQASM 3.0;\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "qubit[%d] q;\n", n_qubits);
    out += buf;
    for (int r = 0; r < n_rounds; ++r) {
        std::snprintf(buf, sizeof(buf), "bit[%d] r%d;\n", n_qubits, r);
        out += buf;
    }
    std::vector<int> measured_in_round(static_cast<std::size_t>(n_rounds), 0);
    for (const auto &ins : instructions) {
        if (ins.kind == CircuitInstruction::Kind::measure) {
            const int slot = measured_in_round[static_cast<std::size_t>(ins.round)]++;
            std::snprintf(buf, sizeof(buf), "r%d[%d] = measure q[%d];\n", ins.round, slot,
                          ins.targets[0]);
            out += buf;
            continue;
        }
        out += ins.name;
        if (!ins.params.empty()) {
            out += '(';
            for (std::size_t i = 0; i < ins.params.size(); ++i) {
                std::snprintf(buf, sizeof(buf), "%s%.17g", i ? ", " : "", ins.params[i]);
                out += buf;
            }
            out += ')';
        }
        for (std::size_t i = 0; i < ins.targets.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%s q[%d]%s", i ? "," : "", ins.targets[i],
                          i + 1 == ins.targets.size() ? ";\n" : "");
            out += buf;
        }
    }
    return out;
}

CircuitDocument CircuitDocument::parse_qasm(const std::string &text) {
    CircuitDocument doc;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // strip comments and surrounding whitespace
        if (const auto pos = line.find("//"); pos != std::string::npos) line.erase(pos);
        const auto begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        line = line.substr(begin, line.find_last_not_of(" \t;") - begin + 1);
        if (line.empty() || line.rfind("OPENQASM", 0) == 0) continue;
        if (line.rfind("qubit[", 0) == 0) {
            doc.n_qubits = std::stoi(line.substr(6));
            continue;
        }
        if (line.rfind("bit[", 0) == 0) continue;
        if (const auto mpos = line.find("= measure "); mpos != std::string::npos) {
            CircuitInstruction ins;
            ins.kind = CircuitInstruction::Kind::measure;
            if (line[0] != 'r') throw std::invalid_argument("bad measure target: " + line);
            ins.round = std::stoi(line.substr(1));
            const auto qpos = line.find("q[", mpos);
            ins.targets = {std::stoi(line.substr(qpos + 2))};
            doc.n_rounds = std::max(doc.n_rounds, ins.round + 1);
            doc.instructions.push_back(std::move(ins));
            continue;
        }
        CircuitInstruction ins;
        ins.kind = CircuitInstruction::Kind::gate;
        auto name_end = line.find_first_of("( \t");
        ins.name = line.substr(0, name_end);
        std::size_t cursor = name_end;
        if (cursor != std::string::npos && line[cursor] == '(') {
            const auto close = line.find(')', cursor);
            if (close == std::string::npos) throw std::invalid_argument("unbalanced '(': " + line);
            std::stringstream ps(line.substr(cursor + 1, close - cursor - 1));
            std::string tok;
            while (std::getline(ps, tok, ',')) ins.params.push_back(std::stod(tok));
            cursor = close + 1;
        }
        std::size_t qpos = line.find("q[", cursor == std::string::npos ? ins.name.size() : cursor);
        while (qpos != std::string::npos) {
            ins.targets.push_back(std::stoi(line.substr(qpos + 2)));
            qpos = line.find("q[", qpos + 2);
        }
        if (ins.targets.empty()) throw std::invalid_argument("gate without targets: " + line);
        doc.instructions.push_back(std::move(ins));
    }
    if (doc.n_qubits == 0) throw std::invalid_argument("missing qubit declaration");
    return doc;
}

std::vector<Matrix> reconstruct_segment_unitaries(const CircuitDocument &doc) {
    const std::int64_t dim = std::int64_t{1} << doc.n_qubits;
    std::vector<Matrix> segments;
    Matrix current = Matrix::Identity(dim, dim);
    bool in_measurement = false;
    bool has_gates = false;
    for (const auto &ins : doc.instructions) {
        if (ins.kind == CircuitInstruction::Kind::measure) {
            if (!in_measurement && has_gates) {
                segments.push_back(current);
                current = Matrix::Identity(dim, dim);
                has_gates = false;
            }
            in_measurement = true;
            continue;
        }
        in_measurement = false;
        current = embed_gate(gate_from_instruction(ins), doc.n_qubits) * current;
        has_gates = true;
    }
    if (has_gates) segments.push_back(current);
    return segments;
}

std::vector<Matrix> intended_segment_unitaries(const ExperimentParams &params, Protocol protocol,
                                               double theta) {
    const int n = 4;
    auto embed = [&](const GateOp &g) { return embed_gate(g, n); };
    Matrix prep = embed(u_xy(params.t_h, 3, 2)) * embed(u_xy(params.t_c, 0, 1)) *
                  embed(cnot(1, 2)) * embed(hadamard(1)) * embed(pauli_x(2)) * embed(pauli_x(1));
    const Matrix interaction = embed(u_theta(theta, 1, 2));
    switch (protocol) {
    case Protocol::qq_initial: return {prep};
    case Protocol::qq_final: return {interaction * prep};
    case Protocol::tpm: return {prep, interaction};
    }
    return {};
}

double reconstruction_error(const CircuitDocument &doc, const ExperimentParams &params,
                            Protocol protocol, double theta) {
    const auto got = reconstruct_segment_unitaries(doc);
    const auto want = intended_segment_unitaries(params, protocol, theta);
    if (got.size() != want.size()) return 1.0;
    double err = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        err = std::max(err, (got[i] - want[i]).cwiseAbs().maxCoeff());
    return err;
}

} // namespace qheat
