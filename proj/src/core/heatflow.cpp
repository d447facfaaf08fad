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

#include "core/heatflow.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "core/gates.hpp"
#include "core/noise.hpp"

namespace qheat {

namespace {
constexpr double kPi = std::numbers::pi;
}

ExperimentParams ExperimentParams::defaults() {
    ExperimentParams p;
    p.t_c = kPi / 3.0;
    p.t_h = kPi / 6.0;
    p.delta = 1.0;
    p.theta_grid = uniform_theta_grid(33);
    return p;
}

void ExperimentParams::validate() const {
    if (t_c < 0.0 || t_c > kPi || t_h < 0.0 || t_h > kPi)
        throw std::invalid_argument("t_c and t_h must lie in [0, pi]");
    if (t_c < t_h)
        throw std::invalid_argument("t_c must be >= t_h (the cold qubit must be colder)");
    if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
    if (theta_grid.empty()) throw std::invalid_argument("theta grid must be non-empty");
}

double ExperimentParams::beta_c() const { return effective_beta(t_c, delta); }
double ExperimentParams::beta_h() const { return effective_beta(t_h, delta); }

std::vector<double> uniform_theta_grid(int n_points) {
    if (n_points < 1) throw std::invalid_argument("theta grid needs at least one point");
    std::vector<double> grid(n_points);
    if (n_points == 1) {
        grid[0] = 0.0;
        return grid;
    }
    for (int i = 0; i < n_points; ++i) grid[i] = kPi * i / (n_points - 1);
    return grid;
}

double effective_beta(double t, double delta) {
    if (t < 0.0 || t > kPi) throw std::invalid_argument("t must lie in [0, pi]");
    if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
    if (t == kPi) return std::numeric_limits<double>::infinity();
    const double tan_half = std::tan(t / 2.0);
    return std::log(1.0 + 2.0 * tan_half * tan_half) / delta;
}

double inv_z(double t) {
    const double c = std::cos(t / 2.0);
    return 1.0 - 0.5 * c * c;
}

double initial_eta(const ExperimentParams &params) {
    return -0.5 * std::cos(params.t_c / 2.0) * std::cos(params.t_h / 2.0);
}

double initial_p00(const ExperimentParams &params) {
    const double cc = std::cos(params.t_c / 2.0), ch = std::cos(params.t_h / 2.0);
    return 1.0 - 0.5 * (cc * cc + ch * ch);
}

namespace {

QuantumState prepare_closed_form(const ExperimentParams &p) {
    const double p00 = initial_p00(p);
    const double zc = inv_z(p.t_c), zh = inv_z(p.t_h);
    const double eta = initial_eta(p);
    Matrix rho = Matrix::Zero(4, 4);
    rho(0, 0) = p00;
    rho(1, 1) = zc - p00;
    rho(2, 2) = zh - p00;
    rho(3, 3) = 1.0 - zc - zh + p00;
    rho(1, 2) = eta;
    rho(2, 1) = eta;
    return QuantumState::from_density(std::move(rho));
}

// Register order: qubit 0 = ancilla 1, qubit 1 = c, qubit 2 = h, qubit 3 = ancilla 2.
QuantumState prepare_circuit(const ExperimentParams &p) {
    QuantumState s = QuantumState::zero_state(4);
    s = apply_gate(s, pauli_x(1));
    s = apply_gate(s, pauli_x(2));
    s = apply_gate(s, hadamard(1));
    s = apply_gate(s, cnot(1, 2));
    s = apply_gate(s, u_xy(p.t_c, 0, 1));
    s = apply_gate(s, u_xy(p.t_h, 3, 2));
    return partial_trace(s, {1, 2});
}

HeatPair heats_from_final(const QuantumState &rho, const Matrix &final_rho, double delta) {
    const Matrix r0 = rho.density();
    // <H_x>/delta = P(x = 1); qubit c is the most significant bit.
    const double ei_c = (r0(2, 2) + r0(3, 3)).real();
    const double ei_h = (r0(1, 1) + r0(3, 3)).real();
    const double ef_c = (final_rho(2, 2) + final_rho(3, 3)).real();
    const double ef_h = (final_rho(1, 1) + final_rho(3, 3)).real();
    return {delta * (ei_c - ef_c), delta * (ei_h - ef_h)};
}

} // namespace

QuantumState prepare_initial_state(const ExperimentParams &params, PrepMethod method) {
    params.validate();
    return method == PrepMethod::closed_form ? prepare_closed_form(params)
                                             : prepare_circuit(params);
}

HeatPair q_quantum(const QuantumState &rho, double theta, double delta) {
    if (rho.n_qubits() != 2) throw std::invalid_argument("q_quantum expects a two-qubit state");
    const Matrix u = u_theta(theta).matrix();
    const Matrix final_rho = u * rho.density() * u.adjoint();
    return heats_from_final(rho, final_rho, delta);
}

HeatPair q_semiclassical(const QuantumState &rho, double theta, double delta, ScVariant variant) {
    if (rho.n_qubits() != 2)
        throw std::invalid_argument("q_semiclassical expects a two-qubit state");
    Matrix second;
    if (variant == ScVariant::dephased) {
        second = dephase(rho, {0, 1}).density();
    } else {
        const Matrix mc = partial_trace(rho, {0}).density();
        const Matrix mh = partial_trace(rho, {1}).density();
        second = Matrix::Zero(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) second(r, c) = mc(r >> 1, c >> 1) * mh(r & 1, c & 1);
    }
    const Matrix u = u_theta(theta).matrix();
    const Matrix final_rho = u * second * u.adjoint();
    return heats_from_final(rho, final_rho, delta);
}

AnalyticHeat q_analytic(const ExperimentParams &params, double theta) {
    params.validate();
    const double cc = std::cos(params.t_c / 2.0), ch = std::cos(params.t_h / 2.0);
    const double swing = cc * std::cos(theta) - std::sin(theta) * ch;
    AnalyticHeat out;
    out.qq = params.delta * 0.5 * (cc * cc - swing * swing);
    const double s = std::sin(theta);
    out.qsc = params.delta * 0.25 * s * s * (std::cos(params.t_c) - std::cos(params.t_h));
    return out;
}

double violation_prefactor(double beta_c, double beta_h, double delta) {
    if (!(beta_c > beta_h))
        throw std::invalid_argument("violation requires beta_c > beta_h strictly");
    const double ec = std::exp(beta_c * delta), eh = std::exp(beta_h * delta);
    if (std::isinf(ec)) return 1.0; // zero-temperature cold qubit limit
    return (2.0 + ec + eh) / (ec - eh);
}

double violation(double qq, double qsc, double beta_c, double beta_h, double delta) {
    return std::abs(qq) - violation_prefactor(beta_c, beta_h, delta) * std::abs(qsc);
}

HeatFlowResult evaluate_point(const ExperimentParams &params, double theta, SweepMode mode,
                              const NoiseModel *noise) {
    HeatFlowResult r;
    r.theta = theta;
    const bool noisy = noise != nullptr && !noise->is_trivial();
    if (mode == SweepMode::analytic && !noisy) {
        const AnalyticHeat a = q_analytic(params, theta);
        r.qq_c = a.qq;
        r.qq_h = -a.qq;
        r.qsc_c = a.qsc;
        r.qsc_h = -a.qsc;
    } else {
        QuantumState rho = prepare_initial_state(params, PrepMethod::closed_form);
        QuantumState rho_q = rho;
        if (noisy && noise->prep_coherence && noise->zeta != 0.0)
            rho_q = apply_noise_to_state(rho, *noise, NoiseStage::prep_coherence);
        const HeatPair qq = q_quantum(rho_q, theta, params.delta);
        r.qq_c = qq.c;
        r.qq_h = qq.h;
        HeatPair qsc;
        if (noisy && noise->midcircuit_readout && (noise->delta_c != 0.0 || noise->delta_h != 0.0)) {
            // Model curve: faithful first measurement, biased product marginals
            // behind the evolution (the mid-circuit back-action model).
            const Matrix u = u_theta(theta).matrix();
            const Matrix biased =
                apply_noise_to_state(rho, *noise, NoiseStage::midcircuit_readout).density();
            const Matrix final_rho = u * biased * u.adjoint();
            const Matrix r0 = rho.density();
            qsc.c = params.delta *
                    ((r0(2, 2) + r0(3, 3)).real() - (final_rho(2, 2) + final_rho(3, 3)).real());
            qsc.h = params.delta *
                    ((r0(1, 1) + r0(3, 3)).real() - (final_rho(1, 1) + final_rho(3, 3)).real());
        } else {
            qsc = q_semiclassical(rho, theta, params.delta);
        }
        r.qsc_c = qsc.c;
        r.qsc_h = qsc.h;
    }
    r.qq_bar = 0.5 * (r.qq_c - r.qq_h);
    r.qsc_bar = 0.5 * (r.qsc_c - r.qsc_h);
    r.dq_q = r.qq_c + r.qq_h;
    r.dq_sc = r.qsc_c + r.qsc_h;
    // Equal effective temperatures make the witness prefactor singular; the
    // degenerate case is reported as 0 rather than rejected so sweeps run.
    r.violation_i = params.beta_c() > params.beta_h()
                        ? violation(r.qq_bar, r.qsc_bar, params.beta_c(), params.beta_h(),
                                    params.delta)
                        : 0.0;
    return r;
}

std::vector<HeatFlowResult> sweep(const ExperimentParams &params, SweepMode mode,
                                  const NoiseModel *noise) {
    params.validate();
    std::vector<HeatFlowResult> out;
    out.reserve(params.theta_grid.size());
    for (double theta : params.theta_grid) out.push_back(evaluate_point(params, theta, mode, noise));
    return out;
}

} // namespace qheat
