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

// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Reference values are frozen closed-form evaluations.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "core/analysis.hpp"
#include "core/gates.hpp"
#include "core/heatflow.hpp"
#include "core/kdq.hpp"
#include "core/noise.hpp"
#include "core/qasm.hpp"
#include "core/rng.hpp"
#include "core/sampler.hpp"

using namespace qheat;

namespace {

int g_failures = 0;

void report(int number, const char *title, bool ok, const std::string &detail = "") {
    std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, title,
                detail.empty() ? "" : " - ", detail.c_str());
    if (!ok) ++g_failures;
}

bool close(double a, double b, double tol) { return std::abs(a - b) < tol; }

void criterion_1_effective_temperatures() {
    const double bc = effective_beta(M_PI / 3.0, 1.0);
    const double bh = effective_beta(M_PI / 6.0, 1.0);
    // frozen closed-form values; both round to 0.51 / 0.13
    bool ok = close(bc, 0.5108256237659906, 1e-9) && close(bh, 0.13417553213997271, 1e-9);
    ok = ok && close(bc, 0.51, 5e-3) && close(bh, 0.13, 5e-3);
    char detail[96];
    std::snprintf(detail, sizeof(detail), "beta_c=%.9f beta_h=%.9f", bc, bh);
    report(1, "effective inverse temperatures", ok, detail);
}

void criterion_2_initial_state() {
    bool ok = true;
    double max_dev = 0.0;
    for (int i = 0; i < 20 && ok; ++i) {
        for (int j = 0; j <= i; ++j) {
            ExperimentParams p = ExperimentParams::defaults();
            p.t_c = M_PI * (i + 0.5) / 20.0;
            p.t_h = M_PI * (j + 0.5) / 20.0;
            const auto circuit = prepare_initial_state(p, PrepMethod::circuit).density();
            const auto closed = prepare_initial_state(p, PrepMethod::closed_form).density();
            max_dev = std::max(max_dev, (circuit - closed).cwiseAbs().maxCoeff());
            ok = ok && max_dev < 1e-12 && std::abs(circuit(3, 3)) < 1e-12;
        }
    }
    const double eta = initial_eta(ExperimentParams::defaults());
    ok = ok && close(eta, -0.41825815186890397, 1e-9);
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max|circuit-closed|=%.2e eta=%.6f", max_dev, eta);
    report(2, "circuit preparation equals the closed form", ok, detail);
}

void criterion_3_analytic_numeric() {
    const auto p = ExperimentParams::defaults();
    const auto rho = prepare_initial_state(p, PrepMethod::closed_form);
    double max_dev = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double theta = M_PI * i / 199.0;
        const auto a = q_analytic(p, theta);
        const auto qq = q_quantum(rho, theta, p.delta);
        const auto qsc = q_semiclassical(rho, theta, p.delta);
        max_dev = std::max(max_dev, std::abs(a.qq - 0.5 * (qq.c - qq.h)));
        max_dev = std::max(max_dev, std::abs(a.qsc - 0.5 * (qsc.c - qsc.h)));
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max deviation %.2e over 200 points", max_dev);
    report(3, "analytic and numeric heat flows agree", max_dev < 1e-12, detail);
}

void criterion_4_energy_conservation() {
    const auto p = ExperimentParams::defaults();
    bool ok = true;
    for (const auto &row : sweep(p, SweepMode::exact_sim))
        ok = ok && std::abs(row.dq_q) < 1e-12 && std::abs(row.dq_sc) < 1e-12;

    // [H_c + H_h, U_theta] = 0 for random angles
    Matrix h_sum = Matrix::Zero(4, 4);
    h_sum(1, 1) = h_sum(2, 2) = 1.0;
    h_sum(3, 3) = 2.0;
    Rng rng(404);
    double max_comm = 0.0;
    for (int k = 0; k < 50; ++k) {
        const Matrix u = u_theta(rng.uniform() * 2.0 * M_PI).matrix();
        max_comm = std::max(max_comm, (h_sum * u - u * h_sum).norm());
    }
    ok = ok && max_comm < 1e-12;
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max commutator norm %.2e", max_comm);
    report(4, "energy conservation", ok, detail);
}

void criterion_5_violation_structure() {
    const auto p = ExperimentParams::defaults();
    const double bc = p.beta_c(), bh = p.beta_h();
    const double kappa = violation_prefactor(bc, bh, p.delta);
    auto wit = [&](double theta) {
        const auto a = q_analytic(p, theta);
        return violation(a.qq, a.qsc, bc, bh, p.delta);
    };
    const double i01 = wit(0.1);
    const bool ok = close(kappa, 9.19615, 1e-4) && close(i01, 0.0738, 1e-4) && i01 > 0.0 &&
                    wit(M_PI - 0.1) > 0.0 && wit(M_PI / 2.0) < 0.0;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "kappa=%.6f I(0.1)=%.6f I(pi/2)=%.6f", kappa, i01,
                  wit(M_PI / 2.0));
    report(5, "violation witness structure", ok, detail);
}

void criterion_6_kdq_consistency() {
    const auto p = ExperimentParams::defaults();
    const auto rho = prepare_initial_state(p, PrepMethod::closed_form);
    const auto dephased_rho = dephase(rho, {0, 1});
    const Matrix r = rho.density();
    bool ok = true;
    for (const auto &row : sweep(p, SweepMode::exact_sim)) {
        const auto d = kdq_distribution(rho, row.theta);
        ok = ok && std::abs(d.sum() - 1.0) < 1e-12;
        for (int i = 0; i < 4; ++i)
            ok = ok && std::abs(d.initial_marginal(i) - r(i, i).real()) < 1e-12;
        const auto q = kdq_heat(d, p.delta);
        const auto direct = q_quantum(rho, row.theta, p.delta);
        ok = ok && std::abs(q.c - direct.c) < 1e-12 && std::abs(q.h - direct.h) < 1e-12;
        if (row.violation_i > 1e-9) ok = ok && negativity(d) > 0.0;

        const auto dc = kdq_distribution(dephased_rho, row.theta);
        for (double v : dc.entries) ok = ok && v >= -1e-12;
        const auto qq = q_quantum(dephased_rho, row.theta, p.delta);
        const auto qsc = q_semiclassical(dephased_rho, row.theta, p.delta);
        ok = ok && violation(0.5 * (qq.c - qq.h), 0.5 * (qsc.c - qsc.h), p.beta_c(),
                             p.beta_h(), p.delta) <= 1e-12;
    }
    report(6, "kdq normalization, marginals, heat and negativity", ok);
}

void criterion_7_sampler_convergence() {
    const auto p = ExperimentParams::defaults();
    const auto rho = prepare_initial_state(p, PrepMethod::closed_form);
    const NoiseModel noiseless;
    SamplerOptions opts;
    opts.shots = 100000;
    bool ok = true;
    double worst = 0.0;
    std::uint64_t seed = 1000;
    for (double theta : {0.1, M_PI / 4.0, M_PI / 2.0, 3.0 * M_PI / 4.0, M_PI - 0.1}) {
        opts.seed = seed++;
        const auto qq = run_qq_protocol(p, theta, noiseless, opts);
        const auto qsc = run_tpm_protocol(p, theta, noiseless, opts);
        const auto eq = q_quantum(rho, theta, p.delta);
        const auto es = q_semiclassical(rho, theta, p.delta);
        auto sigmas = [&](const Estimate &e, double exact) {
            return e.std_error > 0.0 ? std::abs(e.value - exact) / e.std_error
                                     : std::abs(e.value - exact) * 1e15;
        };
        for (double s : {sigmas(qq.c, eq.c), sigmas(qq.h, eq.h), sigmas(qsc.c, es.c),
                         sigmas(qsc.h, es.h)}) {
            worst = std::max(worst, s);
            ok = ok && s < 3.0;
        }
        // bit-identical reruns
        std::vector<ShotRecord> a, b;
        SamplerOptions small = opts;
        small.shots = 2000;
        run_qq_protocol(p, theta, noiseless, small, &a);
        run_qq_protocol(p, theta, noiseless, small, &b);
        ok = ok && shot_records_csv(a) == shot_records_csv(b);
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "worst deviation %.2f sigma at 1e5 shots", worst);
    report(7, "sampler convergence and determinism", ok, detail);
}

void criterion_8_noise_model() {
    const auto p = ExperimentParams::defaults();
    NoiseModel zeta_noise;
    zeta_noise.zeta = 0.06;
    NoiseModel delta_noise;
    delta_noise.delta_c = 0.0125;
    delta_noise.delta_h = 0.023;
    bool ok = true;
    double max_dq = 0.0;
    for (const auto &row : sweep(p, SweepMode::exact_sim, &zeta_noise)) {
        // closed form with the shifted coherence eta + zeta
        const double expect = q_analytic(p, row.theta).qq -
                              2.0 * p.delta * zeta_noise.zeta * std::sin(row.theta) *
                                  std::cos(row.theta);
        ok = ok && std::abs(row.qq_bar - expect) < 1e-12;
    }
    for (const auto &row : sweep(p, SweepMode::exact_sim, &delta_noise)) {
        ok = ok && std::abs(row.dq_sc - 0.0355 * p.delta) < 1e-12;
        max_dq = std::max(max_dq, std::abs(row.dq_sc));
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "dq_sc/delta=%.6f at every theta", max_dq);
    report(8, "noise-model reproduction", ok, detail);
}

void criterion_9_fit_recovery() {
    const auto p = ExperimentParams::defaults();
    NoiseModel noise;
    noise.zeta = 0.06;
    noise.delta_c = 0.0125;
    noise.delta_h = 0.023;

    std::vector<ExperimentRecord> exact;
    for (const auto &row : sweep(p, SweepMode::exact_sim, &noise))
        exact.push_back({row.theta, row.qq_c, row.qq_h, row.qsc_c, row.qsc_h, 0});
    const auto ze = fit_zeta(exact, p);
    const auto de = fit_deltas(exact, p);
    bool ok = close(ze.value, noise.zeta, 1e-6) && close(de.delta_c.value, noise.delta_c, 1e-6) &&
              close(de.delta_h.value, noise.delta_h, 1e-6);

    std::vector<ExperimentRecord> sampled;
    for (int run = 0; run < 15; ++run) {
        for (std::size_t ti = 0; ti < p.theta_grid.size(); ++ti) {
            SamplerOptions opts;
            opts.shots = 10000;
            opts.seed = 9000 + 1000 * static_cast<std::uint64_t>(run) + ti;
            const double theta = p.theta_grid[ti];
            const auto qq = run_qq_protocol(p, theta, noise, opts);
            const auto qsc = run_tpm_protocol(p, theta, noise, opts);
            sampled.push_back({theta, qq.c.value, qq.h.value, qsc.c.value, qsc.h.value, run});
        }
    }
    const auto zs = fit_zeta(sampled, p);
    const auto ds = fit_deltas(sampled, p);
    ok = ok && std::abs(zs.value - noise.zeta) < 3.0 * zs.std_error &&
         std::abs(ds.delta_c.value - noise.delta_c) < 3.0 * ds.delta_c.std_error &&
         std::abs(ds.delta_h.value - noise.delta_h) < 3.0 * ds.delta_h.std_error;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "sampled zeta=%.4f dc=%.4f dh=%.4f (15 runs x 1e4)",
                  zs.value, ds.delta_c.value, ds.delta_h.value);
    report(9, "fit recovery", ok, detail);
}

void criterion_10_qasm_round_trip() {
    const auto p = ExperimentParams::defaults();
    bool ok = true;
    double worst = 0.0;
    for (auto protocol : {Protocol::qq_initial, Protocol::qq_final, Protocol::tpm}) {
        for (double theta : {0.0, 0.5, M_PI / 2.0, 2.8}) {
            const auto doc = build_protocol_circuit(p, protocol, theta);
            const auto parsed = CircuitDocument::parse_qasm(doc.to_qasm());
            worst = std::max(worst, reconstruction_error(parsed, p, protocol, theta));
        }
    }
    ok = worst < 1e-9;
    const auto tpm = build_protocol_circuit(p, Protocol::tpm, 1.0);
    int rounds[2] = {0, 0};
    for (const auto &ins : tpm.instructions)
        if (ins.kind == CircuitInstruction::Kind::measure) ++rounds[ins.round];
    ok = ok && tpm.n_rounds == 2 && rounds[0] == 2 && rounds[1] == 2;
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max reconstruction error %.2e", worst);
    report(10, "qasm round trip", ok, detail);
}

void criterion_11_mitigation() {
    bool ok = true;
    // channel-then-mitigation is the identity on probability vectors
    for (double eps : {0.0, 0.01, 0.05}) {
        const auto m = ConfusionMatrix::from_eps(eps);
        for (double p1 : {0.1, 0.42, 0.9}) {
            const std::vector<double> obs = {1.0 - p1 + eps * p1, (1.0 - eps) * p1};
            const auto rec = mitigate_readout(obs, m);
            ok = ok && std::abs(rec.probs[1] - p1) < 1e-12;
        }
    }
    // sampled biased data: mitigating the observed marginal restores the
    // noiseless value within 3 binomial sigma
    const auto p = ExperimentParams::defaults();
    NoiseModel noise;
    noise.eps_read_c = 0.04;
    noise.midcircuit_readout = false;
    SamplerOptions opts;
    opts.shots = 100000;
    opts.seed = 77;
    std::vector<ShotRecord> recs;
    run_qq_protocol(p, 0.9, noise, opts, &recs);
    const auto rho = prepare_initial_state(p, PrepMethod::closed_form);
    const double p1_true = measurement_probabilities(rho, {0})[1];
    double n1 = 0.0;
    for (const auto &[bits, count] : recs[0].counts)
        if (bits[0] == '1') n1 += static_cast<double>(count);
    const double p1_raw = n1 / static_cast<double>(opts.shots);
    const auto fixed = mitigate_readout({1.0 - p1_raw, p1_raw},
                                        ConfusionMatrix::from_eps(noise.eps_read_c));
    const double se = std::sqrt(p1_raw * (1.0 - p1_raw) / static_cast<double>(opts.shots)) /
                      (1.0 - noise.eps_read_c);
    ok = ok && std::abs(fixed.probs[1] - p1_true) < 3.0 * se;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "mitigated p1=%.5f true p1=%.5f", fixed.probs[1],
                  p1_true);
    report(11, "readout mitigation inverse", ok, detail);
}

} // namespace

int main() {
    criterion_1_effective_temperatures();
    criterion_2_initial_state();
    criterion_3_analytic_numeric();
    criterion_4_energy_conservation();
    criterion_5_violation_structure();
    criterion_6_kdq_consistency();
    criterion_7_sampler_convergence();
    criterion_8_noise_model();
    criterion_9_fit_recovery();
    criterion_10_qasm_round_trip();
    criterion_11_mitigation();
    if (g_failures > 0) {
        std::printf("%d criteria failed\n", g_failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
