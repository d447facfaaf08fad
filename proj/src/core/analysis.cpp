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

#include "core/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "core/noise.hpp"

namespace qheat {

namespace {

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string &s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
}

} // namespace

std::vector<ExperimentRecord> parse_experiment_csv(const std::string &text) {
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line)) throw std::invalid_argument("empty experiment file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_csv_line(line);
    const std::vector<std::string> required = {"theta", "qq_c", "qq_h", "qsc_c", "qsc_h", "run_id"};
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const auto &name : required)
        if (!col.count(name))
            throw std::invalid_argument("experiment CSV is missing required column '" + name + "'");

    std::vector<ExperimentRecord> records;
    std::vector<std::string> errors;
    int line_no = 1;
    while (std::getline(ss, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        try {
            if (fields.size() < header.size()) throw std::invalid_argument("too few fields");
            ExperimentRecord r;
            r.theta = parse_double(fields[col["theta"]]);
            r.qq_c = parse_double(fields[col["qq_c"]]);
            r.qq_h = parse_double(fields[col["qq_h"]]);
            r.qsc_c = parse_double(fields[col["qsc_c"]]);
            r.qsc_h = parse_double(fields[col["qsc_h"]]);
            r.run_id = static_cast<int>(parse_double(fields[col["run_id"]]));
            if (r.theta < 0.0 || r.theta > std::numbers::pi + 1e-12)
                throw std::invalid_argument("theta outside [0, pi]");
            for (double v : {r.qq_c, r.qq_h, r.qsc_c, r.qsc_h})
                if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
            records.push_back(r);
        } catch (const std::exception &e) {
            errors.push_back("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!errors.empty()) {
        std::string msg = "malformed experiment rows:";
        for (const auto &e : errors) msg += "\n  " + e;
        throw std::invalid_argument(msg);
    }
    if (records.empty()) throw std::invalid_argument("experiment file contains no data rows");
    return records;
}

std::vector<ExperimentRecord> load_experiment_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open experiment file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_experiment_csv(buf.str());
}

std::string experiment_records_csv(const std::vector<ExperimentRecord> &records) {
    std::string out = "theta,qq_c,qq_h,qsc_c,qsc_h,run_id\n";
    char buf[200];
    for (const auto &r : records) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%.9g,%.9g,%d\n", r.theta, r.qq_c, r.qq_h,
                      r.qsc_c, r.qsc_h, r.run_id);
        out += buf;
    }
    return out;
}

void ConfusionMatrix::validate() const {
    for (double v : {m00, m01, m10, m11})
        if (v < 0.0 || v > 1.0) throw std::invalid_argument("confusion entries must be in [0, 1]");
    if (std::abs(m00 + m10 - 1.0) > 1e-9 || std::abs(m01 + m11 - 1.0) > 1e-9)
        throw std::invalid_argument("confusion matrix columns must sum to 1 within 1e-9");
}

namespace {

MitigationResult clip_and_renormalize(std::vector<double> probs) {
    MitigationResult res;
    double total = 0.0;
    for (double &p : probs) {
        const double clipped = std::clamp(p, 0.0, 1.0);
        res.clip_l1 += std::abs(p - clipped);
        p = clipped;
        total += p;
    }
    if (total <= 0.0) throw std::invalid_argument("mitigated distribution vanished");
    for (double &p : probs) p /= total;
    res.probs = std::move(probs);
    return res;
}

} // namespace

MitigationResult mitigate_readout(const std::vector<double> &raw_probs, const ConfusionMatrix &m) {
    m.validate();
    if (raw_probs.size() != 2) throw std::invalid_argument("expected a 2-outcome distribution");
    const double det = m.m00 * m.m11 - m.m01 * m.m10;
    if (std::abs(det) < 1e-12) throw std::invalid_argument("confusion matrix is singular");
    // inverse of [[m00, m01], [m10, m11]] applied to the column vector
    const double p0 = (m.m11 * raw_probs[0] - m.m01 * raw_probs[1]) / det;
    const double p1 = (-m.m10 * raw_probs[0] + m.m00 * raw_probs[1]) / det;
    return clip_and_renormalize({p0, p1});
}

MitigationResult mitigate_readout_joint(const std::vector<double> &raw_probs,
                                        const ConfusionMatrix &mc, const ConfusionMatrix &mh) {
    mc.validate();
    mh.validate();
    if (raw_probs.size() != 4) throw std::invalid_argument("expected a 4-outcome distribution");
    const double det_c = mc.m00 * mc.m11 - mc.m01 * mc.m10;
    const double det_h = mh.m00 * mh.m11 - mh.m01 * mh.m10;
    if (std::abs(det_c) < 1e-12 || std::abs(det_h) < 1e-12)
        throw std::invalid_argument("confusion matrix is singular");
    const double ic[2][2] = {{mc.m11 / det_c, -mc.m01 / det_c}, {-mc.m10 / det_c, mc.m00 / det_c}};
    const double ih[2][2] = {{mh.m11 / det_h, -mh.m01 / det_h}, {-mh.m10 / det_h, mh.m00 / det_h}};
    std::vector<double> out(4, 0.0);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            out[static_cast<std::size_t>(a)] +=
                ic[a >> 1][b >> 1] * ih[a & 1][b & 1] * raw_probs[static_cast<std::size_t>(b)];
    return clip_and_renormalize(std::move(out));
}

double model_qq_bar(const ExperimentParams &params, double theta, double zeta) {
    NoiseModel noise;
    noise.zeta = zeta;
    const QuantumState rho = prepare_initial_state(params, PrepMethod::closed_form);
    const QuantumState shifted =
        zeta == 0.0 ? rho : apply_noise_to_state(rho, noise, NoiseStage::prep_coherence);
    const HeatPair qq = q_quantum(shifted, theta, params.delta);
    return 0.5 * (qq.c - qq.h);
}

HeatPair model_qsc(const ExperimentParams &params, double theta, double delta_c, double delta_h) {
    NoiseModel noise;
    noise.delta_c = delta_c;
    noise.delta_h = delta_h;
    const HeatFlowResult r = evaluate_point(params, theta, SweepMode::exact_sim,
                                            (delta_c != 0.0 || delta_h != 0.0) ? &noise : nullptr);
    return {r.qsc_c, r.qsc_h};
}

namespace {

void require_distinct_thetas(const std::vector<ExperimentRecord> &records, std::size_t minimum) {
    std::set<double> thetas;
    for (const auto &r : records) thetas.insert(r.theta);
    if (thetas.size() < minimum)
        throw std::invalid_argument("fit requires at least " + std::to_string(minimum) +
                                    " distinct theta values");
}

} // namespace

ScalarFit fit_zeta(const std::vector<ExperimentRecord> &records, const ExperimentParams &params) {
    params.validate();
    require_distinct_thetas(records, 3);
    // Per-theta mean of the data, model affine in zeta: m(theta) = a + zeta b.
    std::map<double, std::pair<double, int>> grouped;
    for (const auto &r : records) {
        auto &[sum, count] = grouped[r.theta];
        sum += 0.5 * (r.qq_c - r.qq_h);
        ++count;
    }
    double sbb = 0.0, sbr = 0.0;
    std::vector<std::pair<double, double>> rows; // (b, data - a)
    for (const auto &[theta, acc] : grouped) {
        const double data = acc.first / acc.second;
        const double a = model_qq_bar(params, theta, 0.0);
        // d(mean qq)/d(eta) = -delta sin(2 theta), exact for this state family.
        const double b = -params.delta * std::sin(2.0 * theta);
        sbb += b * b;
        sbr += b * (data - a);
        rows.emplace_back(b, data - a);
    }
    if (sbb < 1e-15) throw std::invalid_argument("degenerate theta grid: zeta is unidentifiable");
    ScalarFit fit;
    fit.value = std::clamp(sbr / sbb, -0.5, 0.5);
    for (const auto &[b, d] : rows) {
        const double resid = d - fit.value * b;
        fit.residual += resid * resid;
    }
    const double dof = std::max<double>(1.0, static_cast<double>(rows.size()) - 1.0);
    fit.std_error = std::sqrt(fit.residual / dof / sbb);
    return fit;
}

DeltaFit fit_deltas(const std::vector<ExperimentRecord> &records, const ExperimentParams &params) {
    params.validate();
    require_distinct_thetas(records, 3);
    std::map<double, std::array<double, 3>> grouped; // theta -> (sum qsc_c, sum qsc_h, count)
    for (const auto &r : records) {
        auto &acc = grouped[r.theta];
        acc[0] += r.qsc_c;
        acc[1] += r.qsc_h;
        acc[2] += 1.0;
    }
    // Two rows per theta (qsc_c and qsc_h), affine in (delta_c, delta_h).
    Eigen::MatrixXd design(2 * grouped.size(), 2);
    Eigen::VectorXd target(2 * grouped.size());
    Eigen::Index row = 0;
    for (const auto &[theta, acc] : grouped) {
        const HeatPair base = model_qsc(params, theta, 0.0, 0.0);
        // Exact affine slopes of the biased-marginal model:
        // d qsc_c / d(delta_c, delta_h) = delta (cos^2, sin^2), mirrored for h.
        const double c2 = std::cos(theta) * std::cos(theta);
        const double s2 = std::sin(theta) * std::sin(theta);
        design(row, 0) = params.delta * c2;
        design(row, 1) = params.delta * s2;
        target(row) = acc[0] / acc[2] - base.c;
        ++row;
        design(row, 0) = params.delta * s2;
        design(row, 1) = params.delta * c2;
        target(row) = acc[1] / acc[2] - base.h;
        ++row;
    }
    const Eigen::MatrixXd gram = design.transpose() * design;
    if (std::abs(gram.determinant()) < 1e-15)
        throw std::invalid_argument("rank-deficient design: deltas are unidentifiable");
    const Eigen::Vector2d sol = gram.ldlt().solve(design.transpose() * target);
    const Eigen::VectorXd resid = target - design * sol;
    DeltaFit fit;
    fit.delta_c.value = sol(0);
    fit.delta_h.value = sol(1);
    fit.residual = resid.squaredNorm();
    const double dof = std::max<double>(1.0, static_cast<double>(target.size()) - 2.0);
    const double sigma2 = fit.residual / dof;
    const Eigen::Matrix2d cov = sigma2 * gram.inverse();
    fit.delta_c.std_error = std::sqrt(cov(0, 0));
    fit.delta_h.std_error = std::sqrt(cov(1, 1));
    fit.delta_c.residual = fit.residual;
    fit.delta_h.residual = fit.residual;
    return fit;
}

} // namespace qheat
