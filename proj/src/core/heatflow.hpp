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
 * @file heatflow.hpp
 * The experiment layer: correlated-thermal initial state (circuit and closed
 * form), effective temperatures, quantum and semi-classical heat flows, the
 * analytic closed forms and the violation witness I.
 *
 * Sign convention: qq_c / qsc_c is the heat flowing out of the cold qubit, so
 * positive qq_c means anomalous cold-to-hot flow. All heats are in units of
 * the gap unless delta != 1.
 */
#pragma once

#include <vector>

#include "core/state.hpp"

namespace qheat {

struct NoiseModel;

struct ExperimentParams {
    double t_c;
    double t_h;
    double delta = 1.0;
    std::vector<double> theta_grid;

    /// Reference defaults: t_c = pi/3, t_h = pi/6, 33-point grid on [0, pi].
    static ExperimentParams defaults();

    /// Throws on violated invariants (range of t_c/t_h, delta > 0, empty grid,
    /// or a hotter "cold" qubit).
    void validate() const;

    double beta_c() const;
    double beta_h() const;
};

/// Uniform grid of n points on [0, pi].
std::vector<double> uniform_theta_grid(int n_points);

/// beta = ln(1 + 2 tan^2(t/2)) / delta; +infinity at t = pi (zero temperature).
double effective_beta(double t, double delta);

enum class PrepMethod { circuit, closed_form };

/// Two-qubit density matrix over (c, h) with thermal marginals and coherence
/// eta on the {|01>, |10>} block. The circuit method runs the 4-qubit
/// preparation (singlet + partial swaps with two ancillas) and traces the
/// ancillas out; closed_form evaluates the matrix directly.
QuantumState prepare_initial_state(const ExperimentParams &params, PrepMethod method);

/// Closed-form ingredients of the initial state.
double initial_eta(const ExperimentParams &params);
double initial_p00(const ExperimentParams &params);
double inv_z(double t);

struct HeatPair {
    double c = 0.0;
    double h = 0.0;
};

/// Q_q^x = Tr[rho H_x] - Tr[U_theta rho U_theta^dag H_x], x in {c, h}.
HeatPair q_quantum(const QuantumState &rho, double theta, double delta);

enum class ScVariant { dephased, product_marginals };

/// Two-point-measurement heat: second term evaluated on the dephased state or
/// on the product of the marginals (both agree for states of the prepared
/// family).
HeatPair q_semiclassical(const QuantumState &rho, double theta, double delta,
                         ScVariant variant = ScVariant::dephased);

struct AnalyticHeat {
    double qq = 0.0;
    double qsc = 0.0;
};

/// Closed forms:
///   qq/delta  = cos^2(t_c/2)/2 - (cos(t_c/2) cos(theta) - sin(theta) cos(t_h/2))^2 / 2
///   qsc/delta = sin^2(theta) (cos(t_c) - cos(t_h)) / 4
AnalyticHeat q_analytic(const ExperimentParams &params, double theta);

/// I = |qq| - kappa |qsc| with
/// kappa = (2 + e^{bc d} + e^{bh d}) / (e^{bc d} - e^{bh d}).
/// Requires beta_c > beta_h strictly.
double violation(double qq, double qsc, double beta_c, double beta_h, double delta);
double violation_prefactor(double beta_c, double beta_h, double delta);

struct HeatFlowResult {
    double theta = 0.0;
    double qq_c = 0.0, qq_h = 0.0;
    double qsc_c = 0.0, qsc_h = 0.0;
    double qq_bar = 0.0, qsc_bar = 0.0;
    double dq_q = 0.0, dq_sc = 0.0;
    double violation_i = 0.0;
};

enum class SweepMode { analytic, exact_sim };

/// One result per grid point; violation_i is computed from the mean heats.
/// A non-null noise model shifts the coherence by zeta (affects qq) and the
/// product marginals by delta_c/delta_h (affects qsc), reproducing the model
/// curves.
std::vector<HeatFlowResult> sweep(const ExperimentParams &params, SweepMode mode,
                                  const NoiseModel *noise = nullptr);

/// Single-point variant of sweep().
HeatFlowResult evaluate_point(const ExperimentParams &params, double theta, SweepMode mode,
                              const NoiseModel *noise = nullptr);

} // namespace qheat
