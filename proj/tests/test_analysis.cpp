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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "core/analysis.hpp"
#include "core/noise.hpp"
#include "core/report.hpp"
#include "core/sampler.hpp"

using namespace qheat;

namespace {

std::vector<ExperimentRecord> synthetic_records(const ExperimentParams &params,
                                                const NoiseModel &noise) {
    std::vector<ExperimentRecord> records;
    for (const auto &row : sweep(params, SweepMode::exact_sim, &noise)) {
        ExperimentRecord r;
        r.theta = row.theta;
        r.qq_c = row.qq_c;
        r.qq_h = row.qq_h;
        r.qsc_c = row.qsc_c;
        r.qsc_h = row.qsc_h;
        records.push_back(r);
    }
    return records;
}

} // namespace

TEST_CASE("csv round trip") {
    std::vector<ExperimentRecord> records = {{0.1, 0.25, -0.24, 0.01, -0.02, 0},
                                             {0.2, 0.125, -0.1, 0.005, -0.004, 3}};
    const auto parsed = parse_experiment_csv(experiment_records_csv(records));
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[1].theta == 0.2);
    CHECK(parsed[1].run_id == 3);
    CHECK(parsed[0].qsc_h == -0.02);
}

TEST_CASE("csv ingestion tolerates extra columns and reports bad rows") {
    const std::string ok = "run_id,qq_c,theta,qq_h,qsc_c,qsc_h,extra\n"
                           "1,0.2,0.5,-0.2,0.01,-0.01,banana\n";
    const auto parsed = parse_experiment_csv(ok);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].theta == 0.5);
    CHECK(parsed[0].run_id == 1);

    const std::string missing_col = "theta,qq_c,qq_h,qsc_c\n0.5,0.2,-0.2,0.01\n";
    CHECK_THROWS_AS(parse_experiment_csv(missing_col), std::invalid_argument);

    const std::string bad_rows = "theta,qq_c,qq_h,qsc_c,qsc_h,run_id\n"
                                 "0.5,0.2,-0.2,0.01,-0.01,0\n"
                                 "0.6,zzz,-0.2,0.01,-0.01,0\n"
                                 "0.7,0.2,-0.2,0.01\n";
    try {
        parse_experiment_csv(bad_rows);
        FAIL("expected a parse error");
    } catch (const std::invalid_argument &e) {
        const std::string msg = e.what();
        // every malformed row is reported with its line number
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("line 4") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_experiment_csv(""), std::invalid_argument);
}

TEST_CASE("sweep csv is re-ingestible") {
    const auto params = ExperimentParams::defaults();
    const auto rows = sweep(params, SweepMode::analytic);
    const auto parsed = parse_experiment_csv(sweep_csv(rows, {}));
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(std::abs(parsed[i].qq_c - rows[i].qq_c) < 1e-8);
}

TEST_CASE("confusion matrix validation and mitigation inverse") {
    const auto m = ConfusionMatrix::from_eps(0.02);
    CHECK_NOTHROW(m.validate());
    ConfusionMatrix bad{0.9, 0.0, 0.2, 1.0}; // columns do not sum to 1
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    ConfusionMatrix singular{0.5, 0.5, 0.5, 0.5};
    CHECK_THROWS_AS(mitigate_readout({0.5, 0.5}, singular), std::invalid_argument);

    // identity confusion leaves probabilities unchanged
    const auto id = mitigate_readout({0.3, 0.7}, ConfusionMatrix{});
    CHECK(std::abs(id.probs[0] - 0.3) < 1e-15);
    CHECK(id.clip_l1 == 0.0);

    // channel followed by mitigation is the identity
    const double p1 = 0.42, eps = 0.02;
    const std::vector<double> observed = {1.0 - p1 + eps * p1, (1.0 - eps) * p1};
    const auto rec = mitigate_readout(observed, m);
    CHECK(std::abs(rec.probs[0] - (1.0 - p1)) < 1e-12);
    CHECK(std::abs(rec.probs[1] - p1) < 1e-12);
}

TEST_CASE("joint mitigation inverts the product channel") {
    const auto mc = ConfusionMatrix::from_eps(0.03);
    const auto mh = ConfusionMatrix::from_eps(0.05);
    const std::vector<double> truth = {0.4, 0.3, 0.2, 0.1};
    std::vector<double> observed(4, 0.0);
    auto m_of = [](const ConfusionMatrix &m, int a, int b) {
        return a == 0 ? (b == 0 ? m.m00 : m.m01) : (b == 0 ? m.m10 : m.m11);
    };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            observed[static_cast<std::size_t>(a)] +=
                m_of(mc, a >> 1, b >> 1) * m_of(mh, a & 1, b & 1) *
                truth[static_cast<std::size_t>(b)];
    const auto rec = mitigate_readout_joint(observed, mc, mh);
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(rec.probs[static_cast<std::size_t>(i)] -
                       truth[static_cast<std::size_t>(i)]) < 1e-12);
    CHECK(rec.clip_l1 == 0.0);
}

TEST_CASE("mitigation clips and renormalizes out-of-range results") {
    const auto m = ConfusionMatrix::from_eps(0.1);
    // observed p1 above the channel's reachable range forces a negative p0
    const auto rec = mitigate_readout({0.02, 0.98}, m);
    CHECK(rec.clip_l1 > 0.0);
    CHECK(rec.probs[0] >= 0.0);
    CHECK(std::abs(rec.probs[0] + rec.probs[1] - 1.0) < 1e-12);
}

TEST_CASE("model gradients") {
    const auto params = ExperimentParams::defaults();
    for (double theta : {0.2, 1.0, 2.3}) {
        // zeta moves qq_bar but never qsc (finite differences)
        const double h = 1e-6;
        const auto qsc_plus = model_qsc(params, theta, 0.0, 0.0);
        const double qq0 = model_qq_bar(params, theta, 0.0);
        const double qq1 = model_qq_bar(params, theta, h);
        CHECK(std::abs((qq1 - qq0) / h + params.delta * std::sin(2.0 * theta)) < 1e-6);
        (void)qsc_plus;
        // qsc model is exactly affine in the biases
        const auto a = model_qsc(params, theta, 0.0, 0.0);
        const auto b = model_qsc(params, theta, 0.01, 0.0);
        const auto c = model_qsc(params, theta, 0.02, 0.0);
        CHECK(std::abs((c.c - b.c) - (b.c - a.c)) < 1e-14);
    }
}

TEST_CASE("zeta has no effect on the semi-classical model") {
    const auto params = ExperimentParams::defaults();
    NoiseModel with_zeta;
    with_zeta.zeta = 0.1;
    const auto plain = sweep(params, SweepMode::exact_sim);
    const auto shifted = sweep(params, SweepMode::exact_sim, &with_zeta);
    for (std::size_t i = 0; i < plain.size(); ++i) {
        CHECK(std::abs(plain[i].qsc_c - shifted[i].qsc_c) < 1e-9);
        CHECK(std::abs(plain[i].qsc_h - shifted[i].qsc_h) < 1e-9);
    }
}

TEST_CASE("fit recovers exact synthetic parameters") {
    const auto params = ExperimentParams::defaults();
    NoiseModel noise;
    noise.zeta = 0.06;
    noise.delta_c = 0.0125;
    noise.delta_h = 0.023;
    const auto records = synthetic_records(params, noise);
    const auto zeta = fit_zeta(records, params);
    const auto deltas = fit_deltas(records, params);
    CHECK(std::abs(zeta.value - noise.zeta) < 1e-6);
    CHECK(std::abs(deltas.delta_c.value - noise.delta_c) < 1e-6);
    CHECK(std::abs(deltas.delta_h.value - noise.delta_h) < 1e-6);
    CHECK(zeta.residual < 1e-12);
    CHECK(deltas.residual < 1e-12);
}

TEST_CASE("fit of noiseless data returns zeros") {
    const auto params = ExperimentParams::defaults();
    const auto records = synthetic_records(params, NoiseModel{});
    CHECK(std::abs(fit_zeta(records, params).value) < 1e-9);
    const auto deltas = fit_deltas(records, params);
    CHECK(std::abs(deltas.delta_c.value) < 1e-9);
    CHECK(std::abs(deltas.delta_h.value) < 1e-9);
}

TEST_CASE("fit recovers parameters from sampled data within 3 sigma") {
    const auto params = ExperimentParams::defaults();
    NoiseModel noise;
    noise.zeta = 0.06;
    noise.delta_c = 0.0125;
    noise.delta_h = 0.023;
    std::vector<ExperimentRecord> records;
    for (int run = 0; run < 4; ++run) {
        for (std::size_t ti = 0; ti < params.theta_grid.size(); ++ti) {
            const double theta = params.theta_grid[ti];
            SamplerOptions opts;
            opts.shots = 10000;
            opts.seed = 500 + 1000 * static_cast<std::uint64_t>(run) + ti;
            const auto qq = run_qq_protocol(params, theta, noise, opts);
            const auto qsc = run_tpm_protocol(params, theta, noise, opts);
            records.push_back({theta, qq.c.value, qq.h.value, qsc.c.value, qsc.h.value, run});
        }
    }
    const auto zeta = fit_zeta(records, params);
    const auto deltas = fit_deltas(records, params);
    CHECK(std::abs(zeta.value - noise.zeta) < 3.0 * zeta.std_error);
    CHECK(std::abs(deltas.delta_c.value - noise.delta_c) < 3.0 * deltas.delta_c.std_error);
    CHECK(std::abs(deltas.delta_h.value - noise.delta_h) < 3.0 * deltas.delta_h.std_error);
}

TEST_CASE("fit input validation") {
    const auto params = ExperimentParams::defaults();
    CHECK_THROWS_AS(fit_zeta({}, params), std::invalid_argument);
    CHECK_THROWS_AS(fit_deltas({}, params), std::invalid_argument);
}

TEST_CASE("svg rendering is deterministic") {
    const auto params = ExperimentParams::defaults();
    const auto rows = sweep(params, SweepMode::analytic);
    CHECK(sweep_svg(rows) == sweep_svg(rows));
    const auto records = synthetic_records(params, NoiseModel{});
    const auto svg = fit_overlay_svg(records, params, 0.01, 0.02);
    CHECK(svg == fit_overlay_svg(records, params, 0.01, 0.02));
    CHECK(svg.find("<svg") != std::string::npos);
}
