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
 * @file gates.hpp
 * Gate constructors. Two-qubit matrices are written in the (first target,
 * second target) basis order |00>, |01>, |10>, |11>.
 */
#pragma once

#include "core/state.hpp"

namespace qheat {

GateOp pauli_x(int target);
GateOp hadamard(int target);
GateOp phase_s(int target);
GateOp phase_sdg(int target);
GateOp rot_z(double angle, int target);
GateOp rot_y(double angle, int target);
GateOp cnot(int control, int target);

/// Partial-swap gate: identity outer block, middle block
/// [[cos(t/2), i sin(t/2)], [i sin(t/2), cos(t/2)]]. Identity at t = 0,
/// complete swap at t = pi.
GateOp u_xy(double t, int a = 0, int b = 1);

/// Energy-conserving interaction: real Givens rotation by theta on the
/// degenerate {|01>, |10>} block.
GateOp u_theta(double theta, int a = 0, int b = 1);

} // namespace qheat
