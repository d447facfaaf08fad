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
 * @file report.hpp
 * CSV and static SVG emission. All floats are formatted with %.9g so output
 * is byte-stable for fixed inputs.
 */
#pragma once

#include <string>
#include <vector>

#include "core/analysis.hpp"
#include "core/heatflow.hpp"
#include "core/kdq.hpp"

namespace qheat {

/// Sweep table; one row per (theta, run). Header starts with the columns
/// required by load_experiment_csv, extra columns carry the derived means,
/// discrepancies and the witness.
std::string sweep_csv(const std::vector<HeatFlowResult> &rows, const std::vector<int> &run_ids);

/// 16-row table, columns i_c,i_h,f_c,f_h,p.
std::string kdq_csv(const KdqDistribution &dist);

/// One polyline per named series on a shared axis panel.
struct PlotSeries {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
    bool dashed = false;
};

struct PlotPanel {
    std::string title;
    std::vector<PlotSeries> series;
};

/// Vertically stacked line-chart panels with a shared x axis.
std::string render_svg(const std::vector<PlotPanel> &panels);

/// Three stacked panels: qq, qsc and the witness I against theta.
std::string sweep_svg(const std::vector<HeatFlowResult> &rows);

/// Four panels: qsc_c, -qsc_h, mean qsc and the total-energy discrepancy,
/// data overlaid with ideal and fitted model curves.
std::string fit_overlay_svg(const std::vector<ExperimentRecord> &records,
                            const ExperimentParams &params, double delta_c, double delta_h);

void write_text_file(const std::string &path, const std::string &content);

} // namespace qheat
