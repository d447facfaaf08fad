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

// qheat command-line tool. Thin orchestration over the libqheat C API;
// subcommands: sweep, simulate, kdq, fit, export-qasm.
//
// Exit codes: 0 success, 1 validation error, 2 I/O error, 3 internal
// consistency failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qheat/qheat.h"

namespace {

struct Options {
    double t_c = 3.14159265358979323846 / 3.0;
    double t_h = 3.14159265358979323846 / 6.0;
    double delta = 1.0;
    int theta_points = 33;
    std::uint64_t shots = 0;
    int runs = 1;
    std::uint64_t seed = 1;
    double zeta = 0.0;
    double delta_c = 0.0;
    double delta_h = 0.0;
    std::string mode = "analytic";
    std::string out = ".";
    double theta = 1.5707963267948966;
    std::string data;
    std::string protocol = "tpm";
    std::string config_path;
};

// Flat key-value config file (key=value, # comments). Values apply only to
// options that were not given on the command line.
int apply_config(const CLI::App *cmd, Options &opt) {
    std::ifstream in(opt.config_path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open config file: %s\n", opt.config_path.c_str());
        return 2;
    }
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        line = line.substr(begin, line.find_last_not_of(" \t\r") - begin + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "error: config line %d is not key=value: %s\n", line_no,
                         line.c_str());
            return 1;
        }
        const std::string key = line.substr(0, line.find_last_not_of(" \t", eq - 1) + 1);
        std::string value = line.substr(eq + 1);
        const auto vbegin = value.find_first_not_of(" \t");
        value = vbegin == std::string::npos ? "" : value.substr(vbegin);

        const std::string flag = "--" + key;
        const auto *option = cmd->get_option_no_throw(flag);
        if (option == nullptr || key == "config") {
            std::fprintf(stderr, "error: config line %d: unknown key '%s'\n", line_no,
                         key.c_str());
            return 1;
        }
        if (option->count() > 0) continue; // command line wins
        try {
            if (key == "tc") opt.t_c = std::stod(value);
            else if (key == "th") opt.t_h = std::stod(value);
            else if (key == "delta") opt.delta = std::stod(value);
            else if (key == "theta-points") opt.theta_points = std::stoi(value);
            else if (key == "shots") opt.shots = std::stoull(value);
            else if (key == "runs") opt.runs = std::stoi(value);
            else if (key == "seed") opt.seed = std::stoull(value);
            else if (key == "zeta") opt.zeta = std::stod(value);
            else if (key == "delta-c") opt.delta_c = std::stod(value);
            else if (key == "delta-h") opt.delta_h = std::stod(value);
            else if (key == "theta") opt.theta = std::stod(value);
            else if (key == "mode") opt.mode = value;
            else if (key == "out") opt.out = value;
            else if (key == "data") opt.data = value;
            else if (key == "protocol") opt.protocol = value;
        } catch (const std::exception &) {
            std::fprintf(stderr, "error: config line %d: bad value for '%s': %s\n", line_no,
                         key.c_str(), value.c_str());
            return 1;
        }
    }
    return 0;
}

void add_common_flags(CLI::App *cmd, Options &opt) {
    cmd->add_option("--config", opt.config_path,
                    "Flat key-value config file; CLI flags override it");
    cmd->add_option("--tc", opt.t_c, "Cold-qubit thermal angle in [0, pi]")
        ->capture_default_str();
    cmd->add_option("--th", opt.t_h, "Hot-qubit thermal angle in [0, pi], <= tc")
        ->capture_default_str();
    cmd->add_option("--delta", opt.delta, "Qubit energy gap")->capture_default_str();
    cmd->add_option("--theta-points", opt.theta_points, "Points of the uniform theta grid")
        ->capture_default_str();
    cmd->add_option("--zeta", opt.zeta, "Coherence shift of the prepared state")
        ->capture_default_str();
    cmd->add_option("--delta-c", opt.delta_c, "Cold-qubit readout population bias")
        ->capture_default_str();
    cmd->add_option("--delta-h", opt.delta_h, "Hot-qubit readout population bias")
        ->capture_default_str();
    cmd->add_option("--out", opt.out, "Output directory")->capture_default_str();
}

void add_run_flags(CLI::App *cmd, Options &opt) {
    cmd->add_option("--shots", opt.shots, "Shots per circuit (required for mode=shots)");
    cmd->add_option("--runs", opt.runs, "Independent repetitions (shots mode)")
        ->capture_default_str();
    cmd->add_option("--seed", opt.seed, "Base RNG seed")->capture_default_str();
}

int fail(const char *what, qheat_status status) {
    std::fprintf(stderr, "error: %s: %s\n", what, qheat_last_error());
    return static_cast<int>(status);
}

struct ParamsHandle {
    qheat_params *p = nullptr;
    ~ParamsHandle() { qheat_params_free(p); }
};

struct NoiseHandle {
    qheat_noise *n = nullptr;
    ~NoiseHandle() { qheat_noise_free(n); }
};

int make_params(const Options &opt, ParamsHandle &params) {
    params.p = qheat_params_new(opt.t_c, opt.t_h, opt.delta);
    if (params.p == nullptr) return fail("invalid parameters", QHEAT_ERR_INVALID);
    if (const auto st = qheat_params_set_grid_uniform(params.p, opt.theta_points); st != QHEAT_OK)
        return fail("invalid theta grid", st);
    return 0;
}

int make_noise(const Options &opt, NoiseHandle &noise) {
    if (opt.zeta == 0.0 && opt.delta_c == 0.0 && opt.delta_h == 0.0) return 0;
    noise.n = qheat_noise_new();
    if (const auto st = qheat_noise_set(noise.n, opt.zeta, opt.delta_c, opt.delta_h, 0.0, 0.0);
        st != QHEAT_OK)
        return fail("invalid noise model", st);
    return 0;
}

int run_sweep(const Options &opt, bool force_shots) {
    Options effective = opt;
    if (force_shots) effective.mode = "shots";
    qheat_mode mode;
    if (effective.mode == "analytic") {
        mode = QHEAT_MODE_ANALYTIC;
    } else if (effective.mode == "exact") {
        mode = QHEAT_MODE_EXACT;
    } else if (effective.mode == "shots") {
        mode = QHEAT_MODE_SHOTS;
    } else {
        std::fprintf(stderr, "error: unknown mode '%s' (analytic, exact, shots)\n",
                     effective.mode.c_str());
        return 1;
    }
    if (mode == QHEAT_MODE_SHOTS && effective.shots == 0) {
        std::fprintf(stderr, "error: mode=shots requires --shots\n");
        return 1;
    }
    ParamsHandle params;
    if (const int rc = make_params(effective, params); rc != 0) return rc;
    NoiseHandle noise;
    if (const int rc = make_noise(effective, noise); rc != 0) return rc;

    qheat_sweep *sweep = nullptr;
    if (const auto st = qheat_sweep_run(params.p, mode, noise.n, effective.shots, effective.runs,
                                        effective.seed, &sweep);
        st != QHEAT_OK)
        return fail("sweep failed", st);
    std::unique_ptr<qheat_sweep, void (*)(qheat_sweep *)> guard(sweep, qheat_sweep_free);

    const std::string csv_path = effective.out + "/sweep.csv";
    const std::string svg_path = effective.out + "/sweep.svg";
    if (const auto st = qheat_sweep_write_csv(sweep, csv_path.c_str()); st != QHEAT_OK)
        return fail("writing sweep.csv", st);
    if (const auto st = qheat_sweep_write_svg(sweep, svg_path.c_str()); st != QHEAT_OK)
        return fail("writing sweep.svg", st);
    if (mode == QHEAT_MODE_SHOTS) {
        const std::string shots_path = effective.out + "/shots.csv";
        if (const auto st = qheat_sweep_write_shots_csv(sweep, shots_path.c_str());
            st != QHEAT_OK)
            return fail("writing shots.csv", st);
        std::printf("wrote %s\n", shots_path.c_str());
    }
    std::printf("wrote %s\nwrote %s\n", csv_path.c_str(), svg_path.c_str());
    return 0;
}

int run_kdq(const Options &opt) {
    ParamsHandle params;
    if (const int rc = make_params(opt, params); rc != 0) return rc;
    NoiseHandle noise;
    if (const int rc = make_noise(opt, noise); rc != 0) return rc;

    qheat_kdq *dist = nullptr;
    if (const auto st = qheat_kdq_compute(params.p, opt.theta, noise.n, &dist); st != QHEAT_OK)
        return fail("kdq computation failed", st);
    std::unique_ptr<qheat_kdq, void (*)(qheat_kdq *)> guard(dist, qheat_kdq_free);

    const std::string path = opt.out + "/kdq.csv";
    if (const auto st = qheat_kdq_write_csv(dist, path.c_str()); st != QHEAT_OK)
        return fail("writing kdq.csv", st);
    double neg = 0.0, qq_c = 0.0, qq_h = 0.0;
    qheat_kdq_negativity(dist, &neg);
    qheat_kdq_heat(dist, &qq_c, &qq_h);
    std::printf("theta=%.9g negativity=%.9g qq_c=%.9g qq_h=%.9g\nwrote %s\n", opt.theta, neg,
                qq_c * opt.delta, qq_h * opt.delta, path.c_str());
    return 0;
}

int run_fit(const Options &opt) {
    if (opt.data.empty()) {
        std::fprintf(stderr, "error: fit requires --data\n");
        return 1;
    }
    ParamsHandle params;
    if (const int rc = make_params(opt, params); rc != 0) return rc;

    qheat_dataset *data = nullptr;
    if (const auto st = qheat_dataset_load_csv(opt.data.c_str(), &data); st != QHEAT_OK)
        return fail("loading dataset", st);
    std::unique_ptr<qheat_dataset, void (*)(qheat_dataset *)> guard(data, qheat_dataset_free);

    qheat_fit_report report;
    if (const auto st = qheat_fit(data, params.p, &report); st != QHEAT_OK)
        return fail("fit failed", st);

    char text[512];
    std::snprintf(text, sizeof(text),
                  "zeta=%.9g\nzeta_std_error=%.9g\nzeta_residual=%.9g\n"
                  "delta_c=%.9g\ndelta_c_std_error=%.9g\n"
                  "delta_h=%.9g\ndelta_h_std_error=%.9g\ndelta_residual=%.9g\n",
                  report.zeta, report.zeta_std_error, report.zeta_residual, report.delta_c,
                  report.delta_c_std_error, report.delta_h, report.delta_h_std_error,
                  report.delta_residual);
    std::fputs(text, stdout);

    const std::string txt_path = opt.out + "/fit.txt";
    std::FILE *f = std::fopen(txt_path.c_str(), "wb");
    if (f == nullptr) {
        std::fprintf(stderr, "error: cannot open %s\n", txt_path.c_str());
        return 2;
    }
    std::fputs(text, f);
    std::fclose(f);

    const std::string svg_path = opt.out + "/fit.svg";
    if (const auto st = qheat_fit_write_svg(data, params.p, &report, svg_path.c_str());
        st != QHEAT_OK)
        return fail("writing fit.svg", st);
    std::printf("wrote %s\nwrote %s\n", txt_path.c_str(), svg_path.c_str());
    return 0;
}

int run_export_qasm(const Options &opt) {
    qheat_protocol protocol;
    if (opt.protocol == "qq-initial") {
        protocol = QHEAT_PROTOCOL_QQ_INITIAL;
    } else if (opt.protocol == "qq-final") {
        protocol = QHEAT_PROTOCOL_QQ_FINAL;
    } else if (opt.protocol == "tpm") {
        protocol = QHEAT_PROTOCOL_TPM;
    } else {
        std::fprintf(stderr, "error: unknown protocol '%s' (qq-initial, qq-final, tpm)\n",
                     opt.protocol.c_str());
        return 1;
    }
    ParamsHandle params;
    if (const int rc = make_params(opt, params); rc != 0) return rc;
    const std::string path = opt.out + "/" + opt.protocol + ".qasm";
    if (const auto st = qheat_export_qasm(params.p, protocol, opt.theta, path.c_str());
        st != QHEAT_OK)
        return fail("qasm export", st);
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    Options opt;
    CLI::App app{std::string("qheat ") + qheat_version() +
                 " - two-qubit anomalous heat-flow simulator"};
    app.require_subcommand(1);

    auto *sweep = app.add_subcommand("sweep", "Heat-flow sweep over theta (csv + svg)");
    add_common_flags(sweep, opt);
    add_run_flags(sweep, opt);
    sweep->add_option("--mode", opt.mode, "analytic, exact or shots")->capture_default_str();

    auto *simulate = app.add_subcommand("simulate", "Shot-based sweep with raw outcome counts");
    add_common_flags(simulate, opt);
    add_run_flags(simulate, opt);

    auto *kdq = app.add_subcommand("kdq", "Kirkwood-Dirac quasiprobability table at one theta");
    add_common_flags(kdq, opt);
    kdq->add_option("--theta", opt.theta, "Interaction angle")->capture_default_str();

    auto *fit = app.add_subcommand("fit", "Fit zeta, delta_c, delta_h to an experiment CSV");
    add_common_flags(fit, opt);
    fit->add_option("--data", opt.data, "Experiment CSV path")->required();

    auto *exp = app.add_subcommand("export-qasm", "Emit a protocol circuit as OpenQASM 3");
    add_common_flags(exp, opt);
    exp->add_option("--theta", opt.theta, "Interaction angle")->capture_default_str();
    exp->add_option("--protocol", opt.protocol, "qq-initial, qq-final or tpm")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    const CLI::App *active = sweep->parsed()      ? sweep
                             : simulate->parsed() ? simulate
                             : kdq->parsed()      ? kdq
                             : fit->parsed()      ? fit
                             : exp->parsed()      ? exp
                                                  : nullptr;
    if (active == nullptr) return 1;
    if (!opt.config_path.empty()) {
        if (const int rc = apply_config(active, opt); rc != 0) return rc;
    }

    if (active == sweep) return run_sweep(opt, false);
    if (active == simulate) return run_sweep(opt, true);
    if (active == kdq) return run_kdq(opt);
    if (active == fit) return run_fit(opt);
    return run_export_qasm(opt);
}
