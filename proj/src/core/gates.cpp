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

#include "core/gates.hpp"

#include <cmath>

namespace qheat {

namespace {
const Complex kI{0.0, 1.0};
}

GateOp pauli_x(int target) {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return GateOp("x", m, {target});
}

GateOp hadamard(int target) {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix m(2, 2);
    m << s, s, s, -s;
    return GateOp("h", m, {target});
}

GateOp phase_s(int target) {
    Matrix m(2, 2);
    m << 1, 0, 0, kI;
    return GateOp("s", m, {target});
}

GateOp phase_sdg(int target) {
    Matrix m(2, 2);
    m << 1, 0, 0, -kI;
    return GateOp("sdg", m, {target});
}

GateOp rot_z(double angle, int target) {
    Matrix m(2, 2);
    m << std::exp(-kI * (angle / 2.0)), 0, 0, std::exp(kI * (angle / 2.0));
    return GateOp("rz", m, {target}, {angle});
}

GateOp rot_y(double angle, int target) {
    const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
    Matrix m(2, 2);
    m << c, -s, s, c;
    return GateOp("ry", m, {target}, {angle});
}

GateOp cnot(int control, int target) {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = 1;
    m(2, 3) = m(3, 2) = 1;
    return GateOp("cx", m, {control, target});
}

GateOp u_xy(double t, int a, int b) {
    const double c = std::cos(t / 2.0);
    const Complex is = kI * std::sin(t / 2.0);
    Matrix m = Matrix::Identity(4, 4);
    m(1, 1) = c;
    m(1, 2) = is;
    m(2, 1) = is;
    m(2, 2) = c;
    return GateOp("u_xy", m, {a, b}, {t});
}

GateOp u_theta(double theta, int a, int b) {
    const double c = std::cos(theta), s = std::sin(theta);
    Matrix m = Matrix::Identity(4, 4);
    m(1, 1) = c;
    m(1, 2) = -s;
    m(2, 1) = s;
    m(2, 2) = c;
    return GateOp("u_theta", m, {a, b}, {theta});
}

} // namespace qheat
