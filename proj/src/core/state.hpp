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
 * @file state.hpp
 * Dense statevector / density-matrix representation for up to 6 qubits,
 * gate application, partial trace, dephasing and projective measurement.
 *
 * Qubit ordering convention (fixed repo-wide): basis index bit k, counting
 * from the most significant bit, is qubit k. For a two-qubit register (c, h)
 * the basis order is |0_c 0_h>, |0_c 1_h>, |1_c 0_h>, |1_c 1_h>.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "core/rng.hpp"

namespace qheat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 6;
inline constexpr double kAlgebraicTol = 1e-12;

/// Qubit with energy convention E(|0>) = 0, E(|1>) = gap.
struct DiagonalHamiltonian {
    int qubit = 0;
    double gap = 1.0;
};

/// Named unitary acting on an ordered list of target qubits (1 or 2).
class GateOp {
  public:
    GateOp(std::string name, Matrix matrix, std::vector<int> targets,
           std::vector<double> params = {});

    const std::string &name() const { return name_; }
    const Matrix &matrix() const { return matrix_; }
    const std::vector<int> &targets() const { return targets_; }
    const std::vector<double> &params() const { return params_; }
    int n_targets() const { return static_cast<int>(targets_.size()); }

  private:
    std::string name_;
    Matrix matrix_;
    std::vector<int> targets_;
    std::vector<double> params_;
};

class QuantumState {
  public:
    /// |0...0> statevector on n qubits.
    static QuantumState zero_state(int n_qubits);
    /// Validates the L2 norm (1 within 1e-12).
    static QuantumState from_vector(Vector amplitudes);
    /// Validates Hermiticity, unit trace and positivity (eigenvalues >= -1e-10).
    static QuantumState from_density(Matrix rho);

    int n_qubits() const { return n_qubits_; }
    std::int64_t dim() const { return std::int64_t{1} << n_qubits_; }
    bool is_density() const { return is_density_; }

    const Vector &vector() const;
    /// Density matrix view; promotes a statevector to |psi><psi|.
    Matrix density() const;
    QuantumState as_density() const;

  private:
    QuantumState() = default;
    int n_qubits_ = 0;
    bool is_density_ = false;
    Vector vec_;
    Matrix mat_;
};

/// Full 2^n x 2^n matrix of a gate embedded at its target qubits.
Matrix embed_gate(const GateOp &gate, int n_qubits);

QuantumState apply_gate(const QuantumState &state, const GateOp &gate);

/// Reduced state on `keep` (ordering preserved, ascending qubit index).
QuantumState partial_trace(const QuantumState &state, const std::vector<int> &keep);

/// Zeroes every off-diagonal element in the computational basis of the
/// listed qubits; idempotent and trace preserving.
QuantumState dephase(const QuantumState &state, const std::vector<int> &qubits);

/// Born-rule outcome probabilities over the listed qubits. The first listed
/// qubit is the most significant bit of the outcome index.
std::vector<double> measurement_probabilities(const QuantumState &state,
                                              const std::vector<int> &qubits);

/// Deterministic projection onto a given outcome; throws if the branch has
/// zero probability. Returns (probability, renormalized post state).
std::pair<double, QuantumState> project_outcome(const QuantumState &state,
                                                const std::vector<int> &qubits,
                                                std::uint64_t outcome);

/// Samples an outcome with Born probabilities and collapses.
std::pair<std::uint64_t, QuantumState> measure_projective(const QuantumState &state,
                                                          const std::vector<int> &qubits,
                                                          Rng &rng);

double energy_expectation(const QuantumState &state, const DiagonalHamiltonian &h);

} // namespace qheat
