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
 * @file sampler.hpp
 * Shot-based Monte Carlo emulation of the three physical circuits: the
 * two-circuit protocol for the quantum heat flow and the single mid-circuit
 * (two-point measurement) circuit for the semi-classical heat flow.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/heatflow.hpp"
#include "core/noise.hpp"

namespace qheat {

/// Outcome counts for one measurement round of one circuit.
struct ShotRecord {
    std::string circuit_id; // qq_initial, qq_final or tpm
    double theta = 0.0;
    int round = 0;
    std::map<std::string, std::uint64_t> counts; // bitstring "ch" -> count
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

struct HeatEstimate {
    Estimate c;
    Estimate h;
};

/// How a mid-circuit misread interacts with the quantum state.
/// record_only: the recorded bit flips, the collapsed state is untouched.
/// flip_state: the excited population leaks (the post-measurement state bit
/// drops 1 -> 0) while the record keeps the true outcome. The leakage rate is
/// eps_read, or delta / P(1) when only delta is given.
enum class MidcircuitDisturbance { record_only, flip_state };

struct SamplerOptions {
    std::uint64_t shots = 10000;
    std::uint64_t seed = 1;
    MidcircuitDisturbance disturbance = MidcircuitDisturbance::flip_state;
};

/// Two independent circuits: initial-energy measurement and evolved-energy
/// measurement. Returns Q_q estimates (heat out of each qubit) with binomial
/// standard errors. Appends one ShotRecord per circuit when records != nullptr.
HeatEstimate run_qq_protocol(const ExperimentParams &params, double theta,
                             const NoiseModel &noise, const SamplerOptions &opts,
                             std::vector<ShotRecord> *records = nullptr);

/// Single circuit with a mid-circuit measurement: per shot, prepare, measure
/// (c, h) with collapse, evolve by U_theta, measure again. Returns Q_sc
/// estimates with standard errors from the per-shot sample variance. Appends
/// two ShotRecords (round 0 and 1) when records != nullptr.
HeatEstimate run_tpm_protocol(const ExperimentParams &params, double theta,
                              const NoiseModel &noise, const SamplerOptions &opts,
                              std::vector<ShotRecord> *records = nullptr);

/// CSV with header circuit_id,theta,round,bitstring,count,seed.
std::string shot_records_csv(const std::vector<ShotRecord> &records);

} // namespace qheat
