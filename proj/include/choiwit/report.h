// Copyright 2026 The choiwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHOIWIT_REPORT_H
#define CHOIWIT_REPORT_H

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "choiwit/witnesses.h"

namespace choiwit {

/// Shortest text that round-trips the double ("%.17g"); "nan" for NaN.
std::string format_double(double v);

/// CSV with header `t,gamma,S_l,Q,S_<a>...,lam_min`; in ScanMode::both two
/// extra columns `S_l_numerical,choi_discrepancy` are appended.
std::string scan_csv(const ScanResult &scan, std::span<const int> orders, ScanMode mode);

/// CSV with header `t0,N_S,N_e`.
std::string measures_csv(std::span<const MeasurePoint> series);

struct PlotSeries {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
    /// Fraction of points per tail ignored when choosing the y range, so
    /// that divergences next to poles do not flatten the rest of the plot.
    double tail_fraction = 0.02;
};

/// Standalone SVG line chart with a zero line and legend.
std::string render_svg(const PlotSpec &plot);

/// gamma, 1e3 S_l, 1e2 Q and 1e3 S_alpha against t.
PlotSpec scan_plot(const ScanResult &scan, std::span<const int> orders);

/// N_S and N_e against t0. N_S is drawn as 1e4 N_S so both are visible.
PlotSpec measures_plot(std::span<const MeasurePoint> series);

/// Writes `contents` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path &path, const std::string &contents);

}  // namespace choiwit

#endif
