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

#include "core/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace qheat {

namespace {

int qubits_for_dim(std::int64_t dim) {
    int n = 0;
    while ((std::int64_t{1} << n) < dim) ++n;
    if ((std::int64_t{1} << n) != dim || n < 1 || n > kMaxQubits)
        throw std::invalid_argument("state dimension must be 2^n with 1 <= n <= 6, got " +
                                    std::to_string(dim));
    return n;
}

void check_unitary(const Matrix &u, const std::string &name) {
    const Matrix err = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    if (err.cwiseAbs().maxCoeff() > kAlgebraicTol)
        throw std::invalid_argument("gate '" + name + "' is not unitary within 1e-12");
}

void check_targets(const std::vector<int> &targets, int n_qubits) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= n_qubits)
            throw std::invalid_argument("gate target out of range");
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j]) throw std::invalid_argument("gate targets must be distinct");
    }
}

/// Bit of qubit k in basis index b (MSB = qubit 0).
inline int bit_of(std::int64_t b, int k, int n) { return static_cast<int>((b >> (n - 1 - k)) & 1); }

} // namespace

GateOp::GateOp(std::string name, Matrix matrix, std::vector<int> targets, std::vector<double> params)
    : name_(std::move(name)), matrix_(std::move(matrix)), targets_(std::move(targets)),
      params_(std::move(params)) {
    const auto k = targets_.size();
    if (k != 1 && k != 2) throw std::invalid_argument("gates act on 1 or 2 qubits");
    const std::int64_t d = std::int64_t{1} << k;
    if (matrix_.rows() != d || matrix_.cols() != d)
        throw std::invalid_argument("gate '" + name_ + "': matrix dimension does not match target count");
    check_targets(targets_, kMaxQubits);
    check_unitary(matrix_, name_);
}

QuantumState QuantumState::zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw std::invalid_argument("n_qubits must be in [1, 6]");
    Vector v = Vector::Zero(std::int64_t{1} << n_qubits);
    v(0) = 1.0;
    return from_vector(std::move(v));
}

QuantumState QuantumState::from_vector(Vector amplitudes) {
    QuantumState s;
    s.n_qubits_ = qubits_for_dim(amplitudes.size());
    if (std::abs(amplitudes.norm() - 1.0) > kAlgebraicTol)
        throw std::invalid_argument("statevector norm deviates from 1 beyond 1e-12");
    s.is_density_ = false;
    s.vec_ = std::move(amplitudes);
    return s;
}

QuantumState QuantumState::from_density(Matrix rho) {
    QuantumState s;
    s.n_qubits_ = qubits_for_dim(rho.rows());
    if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kAlgebraicTol)
        throw std::invalid_argument("density matrix is not Hermitian within 1e-12");
    if (std::abs(rho.trace().real() - 1.0) > kAlgebraicTol || std::abs(rho.trace().imag()) > kAlgebraicTol)
        throw std::invalid_argument("density matrix trace deviates from 1 beyond 1e-12");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("density matrix has eigenvalue below -1e-10");
    s.is_density_ = true;
    s.mat_ = std::move(rho);
    return s;
}

const Vector &QuantumState::vector() const {
    if (is_density_) throw std::logic_error("state is a density matrix, not a statevector");
    return vec_;
}

Matrix QuantumState::density() const {
    if (is_density_) return mat_;
    return vec_ * vec_.adjoint();
}

QuantumState QuantumState::as_density() const {
    if (is_density_) return *this;
    return from_density(density());
}

Matrix embed_gate(const GateOp &gate, int n_qubits) {
    check_targets(gate.targets(), n_qubits);
    const std::int64_t dim = std::int64_t{1} << n_qubits;
    const int k = gate.n_targets();
    const auto &targets = gate.targets();
    const Matrix &u = gate.matrix();
    Matrix full = Matrix::Zero(dim, dim);
    for (std::int64_t col = 0; col < dim; ++col) {
        int sub = 0;
        for (int t = 0; t < k; ++t) sub = (sub << 1) | bit_of(col, targets[t], n_qubits);
        for (int subr = 0; subr < (1 << k); ++subr) {
            const Complex amp = u(subr, sub);
            if (amp == Complex{0.0, 0.0}) continue;
            std::int64_t row = col;
            for (int t = 0; t < k; ++t) {
                const std::int64_t mask = std::int64_t{1} << (n_qubits - 1 - targets[t]);
                if ((subr >> (k - 1 - t)) & 1)
                    row |= mask;
                else
                    row &= ~mask;
            }
            full(row, col) = amp;
        }
    }
    return full;
}

QuantumState apply_gate(const QuantumState &state, const GateOp &gate) {
    const Matrix u = embed_gate(gate, state.n_qubits());
    if (state.is_density())
        return QuantumState::from_density(u * state.density() * u.adjoint());
    return QuantumState::from_vector(u * state.vector());
}

QuantumState partial_trace(const QuantumState &state, const std::vector<int> &keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be non-empty");
    const int n = state.n_qubits();
    check_targets(keep, n);
    std::vector<int> traced;
    for (int q = 0; q < n; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
    const Matrix rho = state.density();
    const int nk = static_cast<int>(keep.size());
    const std::int64_t dk = std::int64_t{1} << nk;
    const std::int64_t dt = std::int64_t{1} << traced.size();
    Matrix out = Matrix::Zero(dk, dk);

    auto full_index = [&](std::int64_t kept_bits, std::int64_t traced_bits) {
        std::int64_t b = 0;
        for (int i = 0; i < nk; ++i)
            if ((kept_bits >> (nk - 1 - i)) & 1) b |= std::int64_t{1} << (n - 1 - keep[i]);
        for (std::size_t i = 0; i < traced.size(); ++i)
            if ((traced_bits >> (traced.size() - 1 - i)) & 1) b |= std::int64_t{1} << (n - 1 - traced[i]);
        return b;
    };

    for (std::int64_t r = 0; r < dk; ++r)
        for (std::int64_t c = 0; c < dk; ++c)
            for (std::int64_t t = 0; t < dt; ++t)
                out(r, c) += rho(full_index(r, t), full_index(c, t));
    return QuantumState::from_density(std::move(out));
}

QuantumState dephase(const QuantumState &state, const std::vector<int> &qubits) {
    const int n = state.n_qubits();
    check_targets(qubits, n);
    Matrix rho = state.density();
    const std::int64_t dim = rho.rows();
    for (std::int64_t r = 0; r < dim; ++r)
        for (std::int64_t c = 0; c < dim; ++c)
            for (int q : qubits)
                if (bit_of(r, q, n) != bit_of(c, q, n)) {
                    rho(r, c) = 0.0;
                    break;
                }
    return QuantumState::from_density(std::move(rho));
}

std::vector<double> measurement_probabilities(const QuantumState &state,
                                              const std::vector<int> &qubits) {
    const int n = state.n_qubits();
    check_targets(qubits, n);
    const int m = static_cast<int>(qubits.size());
    std::vector<double> probs(std::size_t{1} << m, 0.0);
    const std::int64_t dim = state.dim();
    const Matrix rho = state.is_density() ? state.density() : Matrix();
    for (std::int64_t b = 0; b < dim; ++b) {
        std::uint64_t out = 0;
        for (int i = 0; i < m; ++i) out = (out << 1) | static_cast<unsigned>(bit_of(b, qubits[i], n));
        probs[out] += state.is_density() ? rho(b, b).real() : std::norm(state.vector()(b));
    }
    return probs;
}

std::pair<double, QuantumState> project_outcome(const QuantumState &state,
                                                const std::vector<int> &qubits,
                                                std::uint64_t outcome) {
    const int n = state.n_qubits();
    check_targets(qubits, n);
    const int m = static_cast<int>(qubits.size());
    if (outcome >= (std::uint64_t{1} << m)) throw std::invalid_argument("outcome out of range");
    const std::int64_t dim = state.dim();
    auto matches = [&](std::int64_t b) {
        for (int i = 0; i < m; ++i)
            if (static_cast<unsigned>(bit_of(b, qubits[i], n)) != ((outcome >> (m - 1 - i)) & 1))
                return false;
        return true;
    };
    if (state.is_density()) {
        Matrix rho = state.density();
        double p = 0.0;
        for (std::int64_t b = 0; b < dim; ++b)
            if (matches(b)) p += rho(b, b).real();
        if (p <= 0.0) throw std::invalid_argument("projection onto zero-probability branch");
        for (std::int64_t r = 0; r < dim; ++r)
            for (std::int64_t c = 0; c < dim; ++c)
                if (!matches(r) || !matches(c)) rho(r, c) = 0.0;
        return {p, QuantumState::from_density(rho / p)};
    }
    Vector v = state.vector();
    double p = 0.0;
    for (std::int64_t b = 0; b < dim; ++b) {
        if (matches(b))
            p += std::norm(v(b));
        else
            v(b) = 0.0;
    }
    if (p <= 0.0) throw std::invalid_argument("projection onto zero-probability branch");
    return {p, QuantumState::from_vector(v / std::sqrt(p))};
}

std::pair<std::uint64_t, QuantumState> measure_projective(const QuantumState &state,
                                                          const std::vector<int> &qubits,
                                                          Rng &rng) {
    const auto probs = measurement_probabilities(state, qubits);
    const std::uint64_t outcome = rng.categorical(probs);
    auto [p, post] = project_outcome(state, qubits, outcome);
    (void)p;
    return {outcome, std::move(post)};
}

double energy_expectation(const QuantumState &state, const DiagonalHamiltonian &h) {
    if (h.qubit < 0 || h.qubit >= state.n_qubits())
        throw std::invalid_argument("hamiltonian qubit out of range");
    const int n = state.n_qubits();
    const Matrix rho = state.is_density() ? state.density() : Matrix();
    double p1 = 0.0;
    for (std::int64_t b = 0; b < state.dim(); ++b)
        if (bit_of(b, h.qubit, n) == 1)
            p1 += state.is_density() ? rho(b, b).real() : std::norm(state.vector()(b));
    return h.gap * p1;
}

} // namespace qheat
