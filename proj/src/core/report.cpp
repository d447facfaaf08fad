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

#include "core/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

namespace qheat {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

} // namespace

std::string sweep_csv(const std::vector<HeatFlowResult> &rows, const std::vector<int> &run_ids) {
    if (!run_ids.empty() && run_ids.size() != rows.size())
        throw std::invalid_argument("run_ids size mismatch");
    std::string out = "theta,qq_c,qq_h,qsc_c,qsc_h,run_id,qq_bar,qsc_bar,dq_q,dq_sc,violation_i\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        const int run = run_ids.empty() ? 0 : run_ids[i];
        out += fmt(r.theta) + ',' + fmt(r.qq_c) + ',' + fmt(r.qq_h) + ',' + fmt(r.qsc_c) + ',' +
               fmt(r.qsc_h) + ',' + std::to_string(run) + ',' + fmt(r.qq_bar) + ',' +
               fmt(r.qsc_bar) + ',' + fmt(r.dq_q) + ',' + fmt(r.dq_sc) + ',' +
               fmt(r.violation_i) + '\n';
    }
    return out;
}

std::string kdq_csv(const KdqDistribution &dist) {
    std::string out = "i_c,i_h,f_c,f_h,p\n";
    for (int i = 0; i < 4; ++i)
        for (int f = 0; f < 4; ++f)
            out += std::to_string(i >> 1) + ',' + std::to_string(i & 1) + ',' +
                   std::to_string(f >> 1) + ',' + std::to_string(f & 1) + ',' +
                   fmt(dist.entry(i, f)) + '\n';
    return out;
}

namespace {

constexpr int kWidth = 640;
constexpr int kPanelHeight = 200;
constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 16;
constexpr int kMarginTop = 28;
constexpr int kMarginBottom = 30;

struct Range {
    double lo = 0.0, hi = 1.0;
    void expand(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
};

} // namespace

std::string render_svg(const std::vector<PlotPanel> &panels) {
    const int total_h = static_cast<int>(panels.size()) * kPanelHeight;
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(kWidth) + "\" height=\"" + std::to_string(total_h) +
                      "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    int y_off = 0;
    for (const auto &panel : panels) {
        Range xr{1e300, -1e300}, yr{1e300, -1e300};
        xr.lo = 1e300;
        for (const auto &s : panel.series) {
            for (double v : s.x) {
                xr.lo = std::min(xr.lo, v);
                xr.hi = std::max(xr.hi, v);
            }
            for (double v : s.y) {
                yr.lo = std::min(yr.lo, v);
                yr.hi = std::max(yr.hi, v);
            }
        }
        if (xr.hi <= xr.lo) xr.hi = xr.lo + 1.0;
        if (yr.hi <= yr.lo) {
            yr.lo -= 0.5;
            yr.hi += 0.5;
        }
        const double pad = 0.05 * (yr.hi - yr.lo);
        yr.lo -= pad;
        yr.hi += pad;
        const double px0 = kMarginLeft, px1 = kWidth - kMarginRight;
        const double py0 = y_off + kMarginTop, py1 = y_off + kPanelHeight - kMarginBottom;
        auto sx = [&](double v) { return px0 + (v - xr.lo) / (xr.hi - xr.lo) * (px1 - px0); };
        auto sy = [&](double v) { return py1 - (v - yr.lo) / (yr.hi - yr.lo) * (py1 - py0); };

        svg += "<text x=\"" + fmt(px0) + "\" y=\"" + fmt(py0 - 10) + "\">" + panel.title +
               "</text>\n";
        svg += "<rect x=\"" + fmt(px0) + "\" y=\"" + fmt(py0) + "\" width=\"" + fmt(px1 - px0) +
               "\" height=\"" + fmt(py1 - py0) + "\" fill=\"none\" stroke=\"#888\"/>\n";
        if (yr.lo < 0.0 && yr.hi > 0.0)
            svg += "<line x1=\"" + fmt(px0) + "\" y1=\"" + fmt(sy(0.0)) + "\" x2=\"" + fmt(px1) +
                   "\" y2=\"" + fmt(sy(0.0)) + "\" stroke=\"#ccc\"/>\n";
        for (double frac : {0.0, 0.5, 1.0}) {
            const double xv = xr.lo + frac * (xr.hi - xr.lo);
            const double yv = yr.lo + frac * (yr.hi - yr.lo);
            svg += "<text x=\"" + fmt(sx(xv) - 8) + "\" y=\"" + fmt(py1 + 14) + "\">" + fmt(xv) +
                   "</text>\n";
            svg += "<text x=\"4\" y=\"" + fmt(sy(yv) + 4) + "\">" + fmt(yv) + "</text>\n";
        }
        int legend_x = static_cast<int>(px0) + 8;
        for (const auto &s : panel.series) {
            if (s.x.empty()) continue;
            std::string points;
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (!std::isfinite(s.y[i])) continue;
                points += fmt(sx(s.x[i])) + ',' + fmt(sy(s.y[i])) + ' ';
            }
            svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\"";
            if (s.dashed) svg += " stroke-dasharray=\"5,3\"";
            svg += " points=\"" + points + "\"/>\n";
            svg += "<text x=\"" + std::to_string(legend_x) + "\" y=\"" + fmt(py0 + 13) +
                   "\" fill=\"" + s.color + "\">" + s.label + "</text>\n";
            legend_x += static_cast<int>(12 * s.label.size()) + 16;
        }
        y_off += kPanelHeight;
    }
    svg += "</svg>\n";
    return svg;
}

std::string sweep_svg(const std::vector<HeatFlowResult> &rows) {
    std::vector<double> theta, qq, qsc, wit;
    for (const auto &r : rows) {
        theta.push_back(r.theta);
        qq.push_back(r.qq_bar);
        qsc.push_back(r.qsc_bar);
        wit.push_back(r.violation_i);
    }
    PlotPanel a{"mean quantum heat flow / gap", {{"qq_bar", "#1f62b4", theta, qq}}};
    PlotPanel b{"mean semi-classical heat flow / gap", {{"qsc_bar", "#1f62b4", theta, qsc}}};
    PlotPanel c{"violation witness I", {{"I", "#c03030", theta, wit}}};
    return render_svg({a, b, c});
}

std::string fit_overlay_svg(const std::vector<ExperimentRecord> &records,
                            const ExperimentParams &params, double delta_c, double delta_h) {
    std::map<double, std::array<double, 3>> grouped;
    for (const auto &r : records) {
        auto &acc = grouped[r.theta];
        acc[0] += r.qsc_c;
        acc[1] += r.qsc_h;
        acc[2] += 1.0;
    }
    std::vector<double> theta, data_c, data_h, data_bar, data_dq;
    for (const auto &[t, acc] : grouped) {
        theta.push_back(t);
        data_c.push_back(acc[0] / acc[2]);
        data_h.push_back(acc[1] / acc[2]);
        data_bar.push_back(0.5 * (acc[0] - acc[1]) / acc[2]);
        data_dq.push_back((acc[0] + acc[1]) / acc[2]);
    }
    std::vector<double> ideal_c, ideal_h, ideal_bar, ideal_dq;
    std::vector<double> model_c, model_h, model_bar, model_dq;
    for (double t : theta) {
        const HeatPair ideal = model_qsc(params, t, 0.0, 0.0);
        const HeatPair model = model_qsc(params, t, delta_c, delta_h);
        ideal_c.push_back(ideal.c);
        ideal_h.push_back(-ideal.h);
        ideal_bar.push_back(0.5 * (ideal.c - ideal.h));
        ideal_dq.push_back(ideal.c + ideal.h);
        model_c.push_back(model.c);
        model_h.push_back(-model.h);
        model_bar.push_back(0.5 * (model.c - model.h));
        model_dq.push_back(model.c + model.h);
    }
    auto panel = [&](const std::string &title, const std::vector<double> &d,
                     const std::vector<double> &ideal, const std::vector<double> &model) {
        return PlotPanel{title,
                         {{"data", "#c03030", theta, d},
                          {"ideal", "#1f62b4", theta, ideal},
                          {"model", "#2a8a2a", theta, model, true}}};
    };
    return render_svg({panel("qsc_c / gap", data_c, ideal_c, model_c),
                       panel("-qsc_h / gap", data_h, ideal_h, model_h),
                       panel("mean qsc / gap", data_bar, ideal_bar, model_bar),
                       panel("total-energy discrepancy dq_sc / gap", data_dq, ideal_dq, model_dq)});
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace qheat
