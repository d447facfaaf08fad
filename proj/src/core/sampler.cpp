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

#include "core/sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "core/gates.hpp"
#include "core/rng.hpp"

namespace qheat {

namespace {

std::array<double, 4> diagonal_probs(const Matrix &rho) {
    std::array<double, 4> p{};
    for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = rho(i, i).real();
    return p;
}

std::size_t sample4(const std::array<double, 4> &p, Rng &rng) {
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        acc += p[i];
        if (u < acc) return i;
    }
    return 3;
}

const char *bitstring_of(std::size_t outcome) {
    static const char *names[4] = {"00", "01", "10", "11"};
    return names[outcome];
}

/// Misread rate per qubit: the explicit eps, or delta / P(1) evaluated at the
/// pre-measurement marginals when only delta is given.
std::array<double, 2> effective_eps(const NoiseModel &noise, const std::array<double, 4> &probs) {
    std::array<double, 2> eps{noise.eps_read_c, noise.eps_read_h};
    const double p1c = probs[2] + probs[3];
    const double p1h = probs[1] + probs[3];
    if (eps[0] == 0.0 && noise.delta_c != 0.0 && p1c > 0.0)
        eps[0] = std::clamp(noise.delta_c / p1c, 0.0, 1.0);
    if (eps[1] == 0.0 && noise.delta_h != 0.0 && p1h > 0.0)
        eps[1] = std::clamp(noise.delta_h / p1h, 0.0, 1.0);
    return eps;
}

QuantumState prepared_state(const ExperimentParams &params, const NoiseModel &noise) {
    QuantumState rho = prepare_initial_state(params, PrepMethod::closed_form);
    if (noise.prep_coherence && noise.zeta != 0.0)
        rho = apply_noise_to_state(rho, noise, NoiseStage::prep_coherence);
    return rho;
}

struct RoundTally {
    std::uint64_t n1c = 0, n1h = 0;
    std::map<std::string, std::uint64_t> counts;

    void add(std::size_t outcome) {
        n1c += outcome >> 1;
        n1h += outcome & 1;
        ++counts[bitstring_of(outcome)];
    }
};

/// Samples one measurement round from a fixed outcome distribution, with
/// optional 1 -> 0 misreads on the recorded bits.
RoundTally sample_round(const std::array<double, 4> &probs, std::uint64_t shots,
                        const std::array<double, 2> &eps, Rng &rng) {
    RoundTally tally;
    for (std::uint64_t s = 0; s < shots; ++s) {
        std::size_t outcome = sample4(probs, rng);
        if ((outcome >> 1) && eps[0] > 0.0 && rng.bernoulli(eps[0])) outcome &= 1u;
        if ((outcome & 1) && eps[1] > 0.0 && rng.bernoulli(eps[1])) outcome &= 2u;
        tally.add(outcome);
    }
    return tally;
}

double binomial_var(double p_hat, std::uint64_t n) {
    return p_hat * (1.0 - p_hat) / static_cast<double>(n);
}

} // namespace

HeatEstimate run_qq_protocol(const ExperimentParams &params, double theta,
                             const NoiseModel &noise, const SamplerOptions &opts,
                             std::vector<ShotRecord> *records) {
    params.validate();
    noise.validate();
    if (opts.shots == 0) throw std::invalid_argument("shots must be >= 1");
    const QuantumState rho = prepared_state(params, noise);
    const Matrix u = u_theta(theta).matrix();
    const auto probs_i = diagonal_probs(rho.density());
    const auto probs_f = diagonal_probs(u * rho.density() * u.adjoint());
    const auto eps_i = noise.final_readout ? effective_eps(noise, probs_i)
                                           : std::array<double, 2>{0.0, 0.0};
    const auto eps_f = noise.final_readout ? effective_eps(noise, probs_f)
                                           : std::array<double, 2>{0.0, 0.0};

    Rng rng_i = Rng::stream(opts.seed, 0);
    Rng rng_f = Rng::stream(opts.seed, 1);
    const RoundTally ti = sample_round(probs_i, opts.shots, eps_i, rng_i);
    const RoundTally tf = sample_round(probs_f, opts.shots, eps_f, rng_f);

    const double n = static_cast<double>(opts.shots);
    const double pic = static_cast<double>(ti.n1c) / n, pih = static_cast<double>(ti.n1h) / n;
    const double pfc = static_cast<double>(tf.n1c) / n, pfh = static_cast<double>(tf.n1h) / n;
    HeatEstimate est;
    est.c.value = params.delta * (pic - pfc);
    est.h.value = params.delta * (pih - pfh);
    est.c.std_error =
        params.delta * std::sqrt(binomial_var(pic, opts.shots) + binomial_var(pfc, opts.shots));
    est.h.std_error =
        params.delta * std::sqrt(binomial_var(pih, opts.shots) + binomial_var(pfh, opts.shots));

    if (records != nullptr) {
        records->push_back({"qq_initial", theta, 0, ti.counts, opts.shots, opts.seed});
        records->push_back({"qq_final", theta, 0, tf.counts, opts.shots, opts.seed});
    }
    return est;
}

HeatEstimate run_tpm_protocol(const ExperimentParams &params, double theta,
                              const NoiseModel &noise, const SamplerOptions &opts,
                              std::vector<ShotRecord> *records) {
    params.validate();
    noise.validate();
    if (opts.shots == 0) throw std::invalid_argument("shots must be >= 1");
    const QuantumState rho = prepared_state(params, noise);
    const auto probs_i = diagonal_probs(rho.density());
    const Matrix u = u_theta(theta).matrix();
    // Final outcome distribution conditioned on the (possibly leaked)
    // post-measurement basis state.
    std::array<std::array<double, 4>, 4> cond{};
    for (int s = 0; s < 4; ++s)
        for (int f = 0; f < 4; ++f)
            cond[static_cast<std::size_t>(s)][static_cast<std::size_t>(f)] = std::norm(u(f, s));

    const auto eps_mid = noise.midcircuit_readout ? effective_eps(noise, probs_i)
                                                  : std::array<double, 2>{0.0, 0.0};
    const std::array<double, 2> eps_fin =
        noise.final_readout ? std::array<double, 2>{noise.eps_read_c, noise.eps_read_h}
                            : std::array<double, 2>{0.0, 0.0};

    Rng rng = Rng::stream(opts.seed, 2);
    RoundTally tally_i, tally_f;
    double sum_c = 0.0, sum_c2 = 0.0, sum_h = 0.0, sum_h2 = 0.0;
    for (std::uint64_t s = 0; s < opts.shots; ++s) {
        std::size_t outcome = sample4(probs_i, rng);
        std::size_t state = outcome;
        std::size_t recorded = outcome;
        if (eps_mid[0] > 0.0 && (outcome >> 1) && rng.bernoulli(eps_mid[0])) {
            if (opts.disturbance == MidcircuitDisturbance::flip_state)
                state &= 1u;
            else
                recorded &= 1u;
        }
        if (eps_mid[1] > 0.0 && (outcome & 1) && rng.bernoulli(eps_mid[1])) {
            if (opts.disturbance == MidcircuitDisturbance::flip_state)
                state &= 2u;
            else
                recorded &= 2u;
        }
        tally_i.add(recorded);

        std::size_t final_outcome = sample4(cond[state], rng);
        if (eps_fin[0] > 0.0 && (final_outcome >> 1) && rng.bernoulli(eps_fin[0]))
            final_outcome &= 1u;
        if (eps_fin[1] > 0.0 && (final_outcome & 1) && rng.bernoulli(eps_fin[1]))
            final_outcome &= 2u;
        tally_f.add(final_outcome);

        const double hc = static_cast<double>(recorded >> 1) - static_cast<double>(final_outcome >> 1);
        const double hh = static_cast<double>(recorded & 1) - static_cast<double>(final_outcome & 1);
        sum_c += hc;
        sum_c2 += hc * hc;
        sum_h += hh;
        sum_h2 += hh * hh;
    }

    const double n = static_cast<double>(opts.shots);
    HeatEstimate est;
    est.c.value = params.delta * sum_c / n;
    est.h.value = params.delta * sum_h / n;
    const double var_c = sum_c2 / n - (sum_c / n) * (sum_c / n);
    const double var_h = sum_h2 / n - (sum_h / n) * (sum_h / n);
    est.c.std_error = params.delta * std::sqrt(std::max(var_c, 0.0) / n);
    est.h.std_error = params.delta * std::sqrt(std::max(var_h, 0.0) / n);

    if (records != nullptr) {
        records->push_back({"tpm", theta, 0, tally_i.counts, opts.shots, opts.seed});
        records->push_back({"tpm", theta, 1, tally_f.counts, opts.shots, opts.seed});
    }
    return est;
}

std::string shot_records_csv(const std::vector<ShotRecord> &records) {
    std::string out = "circuit_id,theta,round,bitstring,count,seed\n";
    char buf[160];
    for (const auto &rec : records)
        for (const auto &[bits, count] : rec.counts) {
            std::snprintf(buf, sizeof(buf), "%s,%.9g,%d,%s,%llu,%llu\n", rec.circuit_id.c_str(),
                          rec.theta, rec.round, bits.c_str(),
                          static_cast<unsigned long long>(count),
                          static_cast<unsigned long long>(rec.seed));
            out += buf;
        }
    return out;
}

} // namespace qheat
