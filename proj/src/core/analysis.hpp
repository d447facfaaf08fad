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
 * @file analysis.hpp
 * Experiment-data ingestion, confusion-matrix readout mitigation and
 * least-squares fitting of the noise parameters (zeta, delta_c, delta_h) to
 * measured heat-flow curves.
 */
#pragma once

#include <string>
#include <vector>

#include "core/heatflow.hpp"

namespace qheat {

struct ExperimentRecord {
    double theta = 0.0;
    double qq_c = 0.0, qq_h = 0.0;
    double qsc_c = 0.0, qsc_h = 0.0;
    int run_id = 0;
};

/// Required CSV header columns: theta,qq_c,qq_h,qsc_c,qsc_h,run_id.
/// Extra columns are ignored. Malformed rows are reported with line numbers.
std::vector<ExperimentRecord> load_experiment_csv(const std::string &path);
std::vector<ExperimentRecord> parse_experiment_csv(const std::string &text);

std::string experiment_records_csv(const std::vector<ExperimentRecord> &records);

/// Per-qubit 2x2 confusion matrix, M(a, b) = P(read a | prepared b);
/// columns sum to 1.
struct ConfusionMatrix {
    // row-major: m01 = P(read 0 | prepared 1) is the 1 -> 0 misread rate.
    double m00 = 1.0, m01 = 0.0;
    double m10 = 0.0, m11 = 1.0;

    static ConfusionMatrix from_eps(double eps_one_read_zero) {
        return {1.0, eps_one_read_zero, 0.0, 1.0 - eps_one_read_zero};
    }
    void validate() const;
};

struct MitigationResult {
    std::vector<double> probs;
    double clip_l1 = 0.0; // total amount clipped before renormalization
};

/// Applies M^-1 to a single-qubit probability vector {p0, p1}, then clips to
/// [0, 1] and renormalizes.
MitigationResult mitigate_readout(const std::vector<double> &raw_probs,
                                  const ConfusionMatrix &m);

/// Tensor-independent mitigation of a joint (c, h) 4-outcome distribution.
MitigationResult mitigate_readout_joint(const std::vector<double> &raw_probs,
                                        const ConfusionMatrix &mc, const ConfusionMatrix &mh);

struct ScalarFit {
    double value = 0.0;
    double std_error = 0.0;
    double residual = 0.0; // sum of squared residuals at the optimum
};

/// Least-squares fit of the coherence shift zeta against the mean quantum
/// heat flow; the model is affine in zeta, solved in closed form and clamped
/// to [-1/2, 1/2].
ScalarFit fit_zeta(const std::vector<ExperimentRecord> &records, const ExperimentParams &params);

struct DeltaFit {
    ScalarFit delta_c;
    ScalarFit delta_h;
    double residual = 0.0;
};

/// Joint linear least-squares fit of (delta_c, delta_h) against qsc_c and
/// qsc_h; the model is affine in both parameters.
DeltaFit fit_deltas(const std::vector<ExperimentRecord> &records, const ExperimentParams &params);

/// Model curves used by the fits (exact, noise-shifted evaluations).
double model_qq_bar(const ExperimentParams &params, double theta, double zeta);
HeatPair model_qsc(const ExperimentParams &params, double theta, double delta_c, double delta_h);

} // namespace qheat
