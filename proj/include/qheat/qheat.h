/*
 * Copyright 2026 The qheat developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * qheat.h - C API of the two-qubit anomalous heat-flow simulator.
 *
 * All functions return qheat_status; on failure qheat_last_error() holds a
 * thread-local diagnostic. Objects returned through out-pointers are owned by
 * the caller and released with the matching *_free function.
 *
 * Conventions: the qubit gap defaults to 1 and all heats are reported in
 * units of the gap; theta parameterizes the energy-conserving interaction;
 * positive qq_c means anomalous cold-to-hot flow.
 */
#ifndef QHEAT_H
#define QHEAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qheat_status {
    QHEAT_OK = 0,
    QHEAT_ERR_INVALID = 1, /* invalid argument / validation failure */
    QHEAT_ERR_IO = 2,      /* file could not be read or written */
    QHEAT_ERR_INTERNAL = 3 /* internal consistency failure */
} qheat_status;

typedef enum qheat_mode {
    QHEAT_MODE_ANALYTIC = 0,
    QHEAT_MODE_EXACT = 1,
    QHEAT_MODE_SHOTS = 2
} qheat_mode;

typedef enum qheat_protocol {
    QHEAT_PROTOCOL_QQ_INITIAL = 0,
    QHEAT_PROTOCOL_QQ_FINAL = 1,
    QHEAT_PROTOCOL_TPM = 2
} qheat_protocol;

typedef struct qheat_params qheat_params;
typedef struct qheat_noise qheat_noise;
typedef struct qheat_sweep qheat_sweep;
typedef struct qheat_kdq qheat_kdq;
typedef struct qheat_dataset qheat_dataset;

typedef struct qheat_heat_row {
    double theta;
    double qq_c, qq_h;
    double qsc_c, qsc_h;
    double qq_bar, qsc_bar;
    double dq_q, dq_sc;
    double violation_i;
    int run_id;
} qheat_heat_row;

typedef struct qheat_fit_report {
    double zeta, zeta_std_error, zeta_residual;
    double delta_c, delta_c_std_error;
    double delta_h, delta_h_std_error;
    double delta_residual;
} qheat_fit_report;

const char *qheat_version(void);
/* Thread-local message of the last failing call. */
const char *qheat_last_error(void);
void qheat_string_free(char *s);

/* --- experiment parameters ------------------------------------------- */

/* t_c, t_h in [0, pi] with t_c >= t_h; delta > 0. Starts with the default
 * 33-point theta grid on [0, pi]. */
qheat_params *qheat_params_new(double t_c, double t_h, double delta);
qheat_status qheat_params_set_grid_uniform(qheat_params *p, int n_points);
qheat_status qheat_params_set_grid(qheat_params *p, const double *thetas, size_t n);
void qheat_params_free(qheat_params *p);

/* beta = ln(1 + 2 tan^2(t/2)) / delta; +inf at t = pi. */
qheat_status qheat_effective_beta(double t, double delta, double *beta);
/* Witness I = |qq| - kappa |qsc|; requires beta_c > beta_h. */
qheat_status qheat_violation(double qq, double qsc, double beta_c, double beta_h, double delta,
                             double *out);

/* --- noise model ------------------------------------------------------ */

qheat_noise *qheat_noise_new(void);
qheat_status qheat_noise_set(qheat_noise *n, double zeta, double delta_c, double delta_h,
                             double eps_read_c, double eps_read_h);
void qheat_noise_free(qheat_noise *n);

/* --- sweeps ----------------------------------------------------------- */

/* One row per (theta, run). Modes analytic/exact use runs = 1; shots mode
 * samples `shots` per circuit and repeats `runs` times with per-run seeds
 * derived from `seed`. noise may be NULL. */
qheat_status qheat_sweep_run(const qheat_params *p, qheat_mode mode, const qheat_noise *noise,
                             uint64_t shots, int runs, uint64_t seed, qheat_sweep **out);
size_t qheat_sweep_size(const qheat_sweep *s);
qheat_status qheat_sweep_row(const qheat_sweep *s, size_t i, qheat_heat_row *row);
qheat_status qheat_sweep_write_csv(const qheat_sweep *s, const char *path);
qheat_status qheat_sweep_write_svg(const qheat_sweep *s, const char *path);
/* Raw outcome counts; only populated by shots mode. */
qheat_status qheat_sweep_write_shots_csv(const qheat_sweep *s, const char *path);
void qheat_sweep_free(qheat_sweep *s);

/* --- Kirkwood-Dirac quasiprobability ---------------------------------- */

qheat_status qheat_kdq_compute(const qheat_params *p, double theta, const qheat_noise *noise,
                               qheat_kdq **out);
/* i, f index the (c, h) pairs: i = 2*i_c + i_h, f = 2*f_c + f_h. */
qheat_status qheat_kdq_entry(const qheat_kdq *d, int i, int f, double *value);
qheat_status qheat_kdq_negativity(const qheat_kdq *d, double *value);
qheat_status qheat_kdq_heat(const qheat_kdq *d, double *qq_c, double *qq_h);
qheat_status qheat_kdq_write_csv(const qheat_kdq *d, const char *path);
void qheat_kdq_free(qheat_kdq *d);

/* --- experiment data and fits ----------------------------------------- */

/* CSV with header theta,qq_c,qq_h,qsc_c,qsc_h,run_id (extra columns are
 * ignored). */
qheat_status qheat_dataset_load_csv(const char *path, qheat_dataset **out);
size_t qheat_dataset_size(const qheat_dataset *d);
qheat_status qheat_fit(const qheat_dataset *d, const qheat_params *p, qheat_fit_report *out);
qheat_status qheat_fit_write_svg(const qheat_dataset *d, const qheat_params *p,
                                 const qheat_fit_report *fit, const char *path);
void qheat_dataset_free(qheat_dataset *d);

/* --- circuit export --------------------------------------------------- */

/* Emits the protocol circuit as an OpenQASM-3 subset. The decomposed gate
 * stream is multiplied back into a matrix and checked against the intended
 * unitaries within 1e-9; a mismatch returns QHEAT_ERR_INTERNAL and writes
 * nothing. */
qheat_status qheat_export_qasm(const qheat_params *p, qheat_protocol protocol, double theta,
                               const char *path);
/* Same, returning a malloc'd string via qheat_string_free. */
qheat_status qheat_export_qasm_string(const qheat_params *p, qheat_protocol protocol, double theta,
                                      char **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QHEAT_H */
