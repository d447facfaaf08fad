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

#include "qheat/qheat.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/analysis.hpp"
#include "core/heatflow.hpp"
#include "core/kdq.hpp"
#include "core/noise.hpp"
#include "core/qasm.hpp"
#include "core/report.hpp"
#include "core/sampler.hpp"

namespace {

thread_local std::string g_last_error;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

qheat_status to_status(const std::exception_ptr &eptr) {
    try {
        std::rethrow_exception(eptr);
    } catch (const std::invalid_argument &e) {
        g_last_error = e.what();
        return QHEAT_ERR_INVALID;
    } catch (const IoError &e) {
        g_last_error = e.what();
        return QHEAT_ERR_IO;
    } catch (const std::runtime_error &e) {
        g_last_error = e.what();
        // file-system failures from the core writers
        if (std::string(e.what()).find("cannot open") != std::string::npos ||
            std::string(e.what()).find("write failed") != std::string::npos)
            return QHEAT_ERR_IO;
        return QHEAT_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return QHEAT_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return QHEAT_ERR_INTERNAL;
    }
}

template <typename Fn> qheat_status guarded(Fn &&fn) {
    try {
        fn();
        return QHEAT_OK;
    } catch (...) {
        return to_status(std::current_exception());
    }
}

qheat_status invalid(const char *msg) {
    g_last_error = msg;
    return QHEAT_ERR_INVALID;
}

} // namespace

struct qheat_params {
    qheat::ExperimentParams value;
};

struct qheat_noise {
    qheat::NoiseModel value;
};

struct qheat_sweep {
    std::vector<qheat::HeatFlowResult> rows;
    std::vector<int> run_ids;
    std::vector<qheat::ShotRecord> shot_records;
};

struct qheat_kdq {
    qheat::KdqDistribution value;
};

struct qheat_dataset {
    std::vector<qheat::ExperimentRecord> records;
};

extern "C" {

const char *qheat_version(void) { return "0.1.0"; }

const char *qheat_last_error(void) { return g_last_error.c_str(); }

void qheat_string_free(char *s) { std::free(s); }

qheat_params *qheat_params_new(double t_c, double t_h, double delta) {
    try {
        auto *p = new qheat_params;
        p->value = qheat::ExperimentParams::defaults();
        p->value.t_c = t_c;
        p->value.t_h = t_h;
        p->value.delta = delta;
        p->value.validate();
        return p;
    } catch (...) {
        to_status(std::current_exception());
        return nullptr;
    }
}

qheat_status qheat_params_set_grid_uniform(qheat_params *p, int n_points) {
    if (p == nullptr) return invalid("null params");
    return guarded([&] { p->value.theta_grid = qheat::uniform_theta_grid(n_points); });
}

qheat_status qheat_params_set_grid(qheat_params *p, const double *thetas, size_t n) {
    if (p == nullptr || (thetas == nullptr && n > 0)) return invalid("null argument");
    return guarded([&] {
        p->value.theta_grid.assign(thetas, thetas + n);
        p->value.validate();
    });
}

void qheat_params_free(qheat_params *p) { delete p; }

qheat_status qheat_effective_beta(double t, double delta, double *beta) {
    if (beta == nullptr) return invalid("null out-pointer");
    return guarded([&] { *beta = qheat::effective_beta(t, delta); });
}

qheat_status qheat_violation(double qq, double qsc, double beta_c, double beta_h, double delta,
                             double *out) {
    if (out == nullptr) return invalid("null out-pointer");
    return guarded([&] { *out = qheat::violation(qq, qsc, beta_c, beta_h, delta); });
}

qheat_noise *qheat_noise_new(void) { return new qheat_noise; }

qheat_status qheat_noise_set(qheat_noise *n, double zeta, double delta_c, double delta_h,
                             double eps_read_c, double eps_read_h) {
    if (n == nullptr) return invalid("null noise model");
    return guarded([&] {
        qheat::NoiseModel m;
        m.zeta = zeta;
        m.delta_c = delta_c;
        m.delta_h = delta_h;
        m.eps_read_c = eps_read_c;
        m.eps_read_h = eps_read_h;
        m.validate();
        n->value = m;
    });
}

void qheat_noise_free(qheat_noise *n) { delete n; }

qheat_status qheat_sweep_run(const qheat_params *p, qheat_mode mode, const qheat_noise *noise,
                             uint64_t shots, int runs, uint64_t seed, qheat_sweep **out) {
    if (p == nullptr || out == nullptr) return invalid("null argument");
    if (mode == QHEAT_MODE_SHOTS && shots == 0)
        return invalid("shots mode requires a positive shot count");
    if (mode != QHEAT_MODE_SHOTS && runs > 1)
        return invalid("multiple runs only apply to shots mode");
    if (runs < 1) return invalid("runs must be >= 1");
    return guarded([&] {
        const qheat::NoiseModel *nm = noise != nullptr ? &noise->value : nullptr;
        auto sweep = std::make_unique<qheat_sweep>();
        if (mode != QHEAT_MODE_SHOTS) {
            sweep->rows = qheat::sweep(
                p->value, mode == QHEAT_MODE_ANALYTIC ? qheat::SweepMode::analytic
                                                      : qheat::SweepMode::exact_sim,
                nm);
            sweep->run_ids.assign(sweep->rows.size(), 0);
        } else {
            p->value.validate();
            const qheat::NoiseModel no_noise;
            const qheat::NoiseModel &model = nm != nullptr ? *nm : no_noise;
            const double beta_c = p->value.beta_c(), beta_h = p->value.beta_h();
            for (int run = 0; run < runs; ++run) {
                for (std::size_t ti = 0; ti < p->value.theta_grid.size(); ++ti) {
                    const double theta = p->value.theta_grid[ti];
                    qheat::SamplerOptions opts;
                    opts.shots = shots;
                    opts.seed = seed + 1000003ull * static_cast<uint64_t>(run) + ti;
                    const auto qq = qheat::run_qq_protocol(p->value, theta, model, opts,
                                                          &sweep->shot_records);
                    const auto qsc = qheat::run_tpm_protocol(p->value, theta, model, opts,
                                                             &sweep->shot_records);
                    qheat::HeatFlowResult r;
                    r.theta = theta;
                    r.qq_c = qq.c.value;
                    r.qq_h = qq.h.value;
                    r.qsc_c = qsc.c.value;
                    r.qsc_h = qsc.h.value;
                    r.qq_bar = 0.5 * (r.qq_c - r.qq_h);
                    r.qsc_bar = 0.5 * (r.qsc_c - r.qsc_h);
                    r.dq_q = r.qq_c + r.qq_h;
                    r.dq_sc = r.qsc_c + r.qsc_h;
                    r.violation_i = beta_c > beta_h
                                        ? qheat::violation(r.qq_bar, r.qsc_bar, beta_c, beta_h,
                                                           p->value.delta)
                                        : 0.0;
                    sweep->rows.push_back(r);
                    sweep->run_ids.push_back(run);
                }
            }
        }
        *out = sweep.release();
    });
}

size_t qheat_sweep_size(const qheat_sweep *s) { return s == nullptr ? 0 : s->rows.size(); }

qheat_status qheat_sweep_row(const qheat_sweep *s, size_t i, qheat_heat_row *row) {
    if (s == nullptr || row == nullptr) return invalid("null argument");
    if (i >= s->rows.size()) return invalid("row index out of range");
    const auto &r = s->rows[i];
    *row = {r.theta, r.qq_c, r.qq_h,  r.qsc_c, r.qsc_h,       r.qq_bar,
            r.qsc_bar, r.dq_q, r.dq_sc, r.violation_i, s->run_ids[i]};
    return QHEAT_OK;
}

qheat_status qheat_sweep_write_csv(const qheat_sweep *s, const char *path) {
    if (s == nullptr || path == nullptr) return invalid("null argument");
    return guarded([&] { qheat::write_text_file(path, qheat::sweep_csv(s->rows, s->run_ids)); });
}

qheat_status qheat_sweep_write_svg(const qheat_sweep *s, const char *path) {
    if (s == nullptr || path == nullptr) return invalid("null argument");
    return guarded([&] { qheat::write_text_file(path, qheat::sweep_svg(s->rows)); });
}

qheat_status qheat_sweep_write_shots_csv(const qheat_sweep *s, const char *path) {
    if (s == nullptr || path == nullptr) return invalid("null argument");
    if (s->shot_records.empty()) return invalid("no shot records (not a shots-mode sweep)");
    return guarded(
        [&] { qheat::write_text_file(path, qheat::shot_records_csv(s->shot_records)); });
}

void qheat_sweep_free(qheat_sweep *s) { delete s; }

qheat_status qheat_kdq_compute(const qheat_params *p, double theta, const qheat_noise *noise,
                               qheat_kdq **out) {
    if (p == nullptr || out == nullptr) return invalid("null argument");
    return guarded([&] {
        qheat::QuantumState rho =
            qheat::prepare_initial_state(p->value, qheat::PrepMethod::closed_form);
        if (noise != nullptr && noise->value.prep_coherence && noise->value.zeta != 0.0)
            rho = qheat::apply_noise_to_state(rho, noise->value,
                                              qheat::NoiseStage::prep_coherence);
        auto *d = new qheat_kdq{qheat::kdq_distribution(rho, theta)};
        *out = d;
    });
}

qheat_status qheat_kdq_entry(const qheat_kdq *d, int i, int f, double *value) {
    if (d == nullptr || value == nullptr) return invalid("null argument");
    if (i < 0 || i > 3 || f < 0 || f > 3) return invalid("kdq index out of range");
    *value = d->value.entry(i, f);
    return QHEAT_OK;
}

qheat_status qheat_kdq_negativity(const qheat_kdq *d, double *value) {
    if (d == nullptr || value == nullptr) return invalid("null argument");
    *value = qheat::negativity(d->value);
    return QHEAT_OK;
}

qheat_status qheat_kdq_heat(const qheat_kdq *d, double *qq_c, double *qq_h) {
    if (d == nullptr || qq_c == nullptr || qq_h == nullptr) return invalid("null argument");
    const auto q = qheat::kdq_heat(d->value, 1.0);
    *qq_c = q.c;
    *qq_h = q.h;
    return QHEAT_OK;
}

qheat_status qheat_kdq_write_csv(const qheat_kdq *d, const char *path) {
    if (d == nullptr || path == nullptr) return invalid("null argument");
    return guarded([&] { qheat::write_text_file(path, qheat::kdq_csv(d->value)); });
}

void qheat_kdq_free(qheat_kdq *d) { delete d; }

qheat_status qheat_dataset_load_csv(const char *path, qheat_dataset **out) {
    if (path == nullptr || out == nullptr) return invalid("null argument");
    return guarded([&] {
        try {
            auto *d = new qheat_dataset{qheat::load_experiment_csv(path)};
            *out = d;
        } catch (const std::runtime_error &e) {
            throw IoError(e.what());
        }
    });
}

size_t qheat_dataset_size(const qheat_dataset *d) { return d == nullptr ? 0 : d->records.size(); }

qheat_status qheat_fit(const qheat_dataset *d, const qheat_params *p, qheat_fit_report *out) {
    if (d == nullptr || p == nullptr || out == nullptr) return invalid("null argument");
    return guarded([&] {
        const auto zeta = qheat::fit_zeta(d->records, p->value);
        const auto deltas = qheat::fit_deltas(d->records, p->value);
        *out = {zeta.value,          zeta.std_error,
                zeta.residual,       deltas.delta_c.value,
                deltas.delta_c.std_error, deltas.delta_h.value,
                deltas.delta_h.std_error, deltas.residual};
    });
}

qheat_status qheat_fit_write_svg(const qheat_dataset *d, const qheat_params *p,
                                 const qheat_fit_report *fit, const char *path) {
    if (d == nullptr || p == nullptr || fit == nullptr || path == nullptr)
        return invalid("null argument");
    return guarded([&] {
        qheat::write_text_file(
            path, qheat::fit_overlay_svg(d->records, p->value, fit->delta_c, fit->delta_h));
    });
}

void qheat_dataset_free(qheat_dataset *d) { delete d; }

namespace {

qheat_status export_qasm_impl(const qheat_params *p, qheat_protocol protocol, double theta,
                              std::string *out_text) {
    if (p == nullptr) return invalid("null params");
    if (protocol < QHEAT_PROTOCOL_QQ_INITIAL || protocol > QHEAT_PROTOCOL_TPM)
        return invalid("unknown protocol");
    return guarded([&] {
        const auto proto = static_cast<qheat::Protocol>(protocol);
        const auto doc = qheat::build_protocol_circuit(p->value, proto, theta);
        const std::string text = doc.to_qasm();
        // round-trip self check: parse the emitted text and compare unitaries
        const auto parsed = qheat::CircuitDocument::parse_qasm(text);
        const double err = qheat::reconstruction_error(parsed, p->value, proto, theta);
        if (err > 1e-9)
            throw std::runtime_error("qasm reconstruction mismatch (max deviation " +
                                     std::to_string(err) + ")");
        *out_text = text;
    });
}

} // namespace

qheat_status qheat_export_qasm(const qheat_params *p, qheat_protocol protocol, double theta,
                               const char *path) {
    if (path == nullptr) return invalid("null path");
    std::string text;
    const qheat_status st = export_qasm_impl(p, protocol, theta, &text);
    if (st != QHEAT_OK) return st;
    return guarded([&] { qheat::write_text_file(path, text); });
}

qheat_status qheat_export_qasm_string(const qheat_params *p, qheat_protocol protocol, double theta,
                                      char **out) {
    if (out == nullptr) return invalid("null out-pointer");
    std::string text;
    const qheat_status st = export_qasm_impl(p, protocol, theta, &text);
    if (st != QHEAT_OK) return st;
    char *buf = static_cast<char *>(std::malloc(text.size() + 1));
    if (buf == nullptr) {
        g_last_error = "out of memory";
        return QHEAT_ERR_INTERNAL;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return QHEAT_OK;
}

} // extern "C"
