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

#include "core/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace qheat {

void NoiseModel::validate() const {
    if (std::abs(zeta) > 0.5) throw std::invalid_argument("|zeta| must be <= 1/2");
    for (double eps : {eps_read_c, eps_read_h})
        if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("eps_read must be in [0, 1]");
}

namespace {

QuantumState checked_density(Matrix rho, const char *what) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    const double lambda_min = es.eigenvalues().minCoeff();
    if (lambda_min < -1e-10)
        throw std::invalid_argument(std::string(what) +
                                    " breaks positive semidefiniteness (lambda_min = " +
                                    std::to_string(lambda_min) + ")");
    return QuantumState::from_density(std::move(rho));
}

Matrix shifted_marginal(const QuantumState &rho2, int qubit, double delta) {
    Matrix m = partial_trace(rho2, {qubit}).density();
    m(0, 0) += delta;
    m(1, 1) -= delta;
    return m;
}

} // namespace

QuantumState apply_noise_to_state(const QuantumState &rho, const NoiseModel &noise,
                                  NoiseStage stage) {
    noise.validate();
    switch (stage) {
    case NoiseStage::prep_coherence: {
        if (!noise.prep_coherence)
            throw std::invalid_argument("prep_coherence stage not enabled in this noise model");
        if (rho.n_qubits() != 2)
            throw std::invalid_argument("coherence shift is defined on a two-qubit state");
        Matrix m = rho.density();
        m(1, 2) += noise.zeta;
        m(2, 1) += noise.zeta;
        return checked_density(std::move(m), "coherence shift zeta");
    }
    case NoiseStage::midcircuit_readout:
    case NoiseStage::final_readout: {
        const bool enabled = stage == NoiseStage::midcircuit_readout ? noise.midcircuit_readout
                                                                     : noise.final_readout;
        if (!enabled) throw std::invalid_argument("readout stage not enabled in this noise model");
        if (rho.n_qubits() == 1) {
            Matrix m = rho.density();
            m(0, 0) += noise.delta_c;
            m(1, 1) -= noise.delta_c;
            return checked_density(std::move(m), "population bias delta");
        }
        if (rho.n_qubits() != 2)
            throw std::invalid_argument("population bias is defined on 1- or 2-qubit states");
        const Matrix mc = shifted_marginal(rho, 0, noise.delta_c);
        const Matrix mh = shifted_marginal(rho, 1, noise.delta_h);
        Matrix joint = Matrix::Zero(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                joint(r, c) = mc(r >> 1, c >> 1) * mh(r & 1, c & 1);
        return checked_density(std::move(joint), "population bias delta");
    }
    }
    throw std::logic_error("unknown noise stage");
}

} // namespace qheat
