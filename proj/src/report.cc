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

#include "choiwit/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "choiwit/run_config.h"

namespace choiwit {

namespace {

constexpr double kWidth = 900;
constexpr double kHeight = 540;
constexpr double kMarginLeft = 80;
constexpr double kMarginRight = 180;
constexpr double kMarginTop = 50;
constexpr double kMarginBottom = 60;

std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

std::string escape_xml(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

double nice_step(double span, int target_ticks) {
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    const double nice = norm < 1.5 ? 1 : norm < 3 ? 2 : norm < 7 ? 5 : 10;
    return nice * mag;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string scan_csv(const ScanResult &scan, std::span<const int> orders, ScanMode mode) {
    std::ostringstream out;
    out << "t,gamma,S_l,Q";
    for (int a : orders) {
        out << ",S_" << a;
    }
    out << ",lam_min";
    if (mode == ScanMode::both) {
        out << ",S_l_numerical,choi_discrepancy";
    }
    out << "\r\n";
    for (const auto &s : scan.samples) {
        out << format_double(s.t) << ',' << format_double(s.gamma.value_or(NAN)) << ','
            << format_double(s.linear_entropy) << ',' << format_double(s.q.value_or(NAN));
        for (int a : orders) {
            const auto it = s.renyi.find(a);
            out << ',' << format_double(it == s.renyi.end() ? NAN : it->second);
        }
        out << ',' << format_double(s.min_eigenvalue());
        if (mode == ScanMode::both) {
            out << ',' << format_double(s.numerical_linear_entropy.value_or(NAN)) << ','
                << format_double(s.choi_discrepancy.value_or(NAN));
        }
        out << "\r\n";
    }
    return out.str();
}

std::string measures_csv(std::span<const MeasurePoint> series) {
    std::ostringstream out;
    out << "t0,N_S,N_e\r\n";
    for (const auto &m : series) {
        out << format_double(m.t0) << ',' << format_double(m.ns.value) << ',' << format_double(m.ne.value)
            << "\r\n";
    }
    return out.str();
}

std::string render_svg(const PlotSpec &plot) {
    double x_min = INFINITY, x_max = -INFINITY;
    std::vector<double> ys;
    for (const auto &s : plot.series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                continue;
            }
            x_min = std::min(x_min, s.x[i]);
            x_max = std::max(x_max, s.x[i]);
            ys.push_back(s.y[i]);
        }
    }
    if (ys.empty()) {
        x_min = 0, x_max = 1;
        ys = {-1, 1};
    }
    std::sort(ys.begin(), ys.end());
    const auto tail = static_cast<std::size_t>(plot.tail_fraction * static_cast<double>(ys.size()));
    double y_min = std::min(0.0, ys[tail]);
    double y_max = std::max(0.0, ys[ys.size() - 1 - tail]);
    if (y_max - y_min < 1e-12) {
        y_min -= 1, y_max += 1;
    }
    const double pad = 0.08 * (y_max - y_min);
    y_min -= pad, y_max += pad;
    if (x_max - x_min < 1e-12) {
        x_max = x_min + 1;
    }

    const double pw = kWidth - kMarginLeft - kMarginRight;
    const double ph = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * pw; };
    auto sy = [&](double y) { return kMarginTop + (y_max - y) / (y_max - y_min) * ph; };

    std::ostringstream out;
    out << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << kWidth << R"(" height=")" << kHeight
        << R"(" viewBox="0 0 )" << kWidth << ' ' << kHeight << R"(" font-family="sans-serif" font-size="13">)"
        << '\n';
    out << R"(<rect width="100%" height="100%" fill="white"/>)" << '\n';
    out << R"(<defs><clipPath id="plot"><rect x=")" << fmt_coord(kMarginLeft) << R"(" y=")" << fmt_coord(kMarginTop)
        << R"(" width=")" << fmt_coord(pw) << R"(" height=")" << fmt_coord(ph) << R"("/></clipPath></defs>)" << '\n';
    out << R"(<text x=")" << fmt_coord(kMarginLeft + pw / 2) << R"(" y="28" text-anchor="middle" font-size="16">)"
        << escape_xml(plot.title) << "</text>\n";

    // Ticks and grid.
    const double xs = nice_step(x_max - x_min, 10);
    for (double x = std::ceil(x_min / xs) * xs; x <= x_max + 1e-9 * xs; x += xs) {
        out << R"(<line x1=")" << fmt_coord(sx(x)) << R"(" y1=")" << fmt_coord(kMarginTop) << R"(" x2=")"
            << fmt_coord(sx(x)) << R"(" y2=")" << fmt_coord(kMarginTop + ph) << R"(" stroke="#eee"/>)" << '\n';
        out << R"(<text x=")" << fmt_coord(sx(x)) << R"(" y=")" << fmt_coord(kMarginTop + ph + 18)
            << R"(" text-anchor="middle">)" << fmt_tick(x) << "</text>\n";
    }
    const double ysd = nice_step(y_max - y_min, 8);
    for (double y = std::ceil(y_min / ysd) * ysd; y <= y_max + 1e-9 * ysd; y += ysd) {
        out << R"(<line x1=")" << fmt_coord(kMarginLeft) << R"(" y1=")" << fmt_coord(sy(y)) << R"(" x2=")"
            << fmt_coord(kMarginLeft + pw) << R"(" y2=")" << fmt_coord(sy(y)) << R"(" stroke="#eee"/>)" << '\n';
        out << R"(<text x=")" << fmt_coord(kMarginLeft - 8) << R"(" y=")" << fmt_coord(sy(y) + 4)
            << R"(" text-anchor="end">)" << fmt_tick(y) << "</text>\n";
    }
    out << R"(<rect x=")" << fmt_coord(kMarginLeft) << R"(" y=")" << fmt_coord(kMarginTop) << R"(" width=")"
        << fmt_coord(pw) << R"(" height=")" << fmt_coord(ph) << R"(" fill="none" stroke="black"/>)" << '\n';
    out << R"(<line x1=")" << fmt_coord(kMarginLeft) << R"(" y1=")" << fmt_coord(sy(0)) << R"(" x2=")"
        << fmt_coord(kMarginLeft + pw) << R"(" y2=")" << fmt_coord(sy(0))
        << R"(" stroke="black" stroke-dasharray="4 3"/>)" << '\n';
    out << R"(<text x=")" << fmt_coord(kMarginLeft + pw / 2) << R"(" y=")" << fmt_coord(kHeight - 15)
        << R"(" text-anchor="middle">)" << escape_xml(plot.x_label) << "</text>\n";
    out << R"(<text transform="translate(20,)" << fmt_coord(kMarginTop + ph / 2)
        << R"svg() rotate(-90)" text-anchor="middle">)svg" << escape_xml(plot.y_label) << "</text>\n";

    // Series; a gap in x larger than 3 median steps (a skipped pole zone) breaks the line.
    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const auto &s = plot.series[k];
        std::vector<double> dx;
        for (std::size_t i = 1; i < s.x.size(); ++i) {
            dx.push_back(s.x[i] - s.x[i - 1]);
        }
        double gap = INFINITY;
        if (!dx.empty()) {
            std::nth_element(dx.begin(), dx.begin() + dx.size() / 2, dx.end());
            gap = 3 * dx[dx.size() / 2];
        }
        out << R"svg(<path clip-path="url(#plot)" fill="none" stroke-width="1.6" stroke=")svg" << s.color << R"(" d=")";
        bool pen_down = false;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.y[i])) {
                pen_down = false;
                continue;
            }
            if (i > 0 && s.x[i] - s.x[i - 1] > gap) {
                pen_down = false;
            }
            const double y = std::clamp(s.y[i], y_min - 10 * (y_max - y_min), y_max + 10 * (y_max - y_min));
            out << (pen_down ? 'L' : 'M') << fmt_coord(sx(s.x[i])) << ' ' << fmt_coord(sy(y)) << ' ';
            pen_down = true;
        }
        out << R"("/>)" << '\n';
        const double ly = kMarginTop + 20 + 22 * static_cast<double>(k);
        const double lx = kMarginLeft + pw + 15;
        out << R"(<line x1=")" << fmt_coord(lx) << R"(" y1=")" << fmt_coord(ly) << R"(" x2=")" << fmt_coord(lx + 25)
            << R"(" y2=")" << fmt_coord(ly) << R"(" stroke-width="2" stroke=")" << s.color << R"("/>)" << '\n';
        out << R"(<text x=")" << fmt_coord(lx + 32) << R"(" y=")" << fmt_coord(ly + 4) << R"(">)"
            << escape_xml(s.label) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

PlotSpec scan_plot(const ScanResult &scan, std::span<const int> orders) {
    static const char *kRenyiColors[] = {"#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};
    PlotSpec plot;
    plot.title = "Dephasing channel witnesses";
    plot.x_label = "t";
    plot.y_label = "value (scaled)";
    PlotSeries gamma{"gamma(t)", "#1f77b4", {}, {}};
    PlotSeries sl{"1e3 * S_l", "#d62728", {}, {}};
    PlotSeries q{"1e2 * Q", "#ff7f0e", {}, {}};
    std::vector<PlotSeries> renyi;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        renyi.push_back({"1e3 * S_" + std::to_string(orders[k]), kRenyiColors[k % 6], {}, {}});
    }
    for (const auto &s : scan.samples) {
        gamma.x.push_back(s.t);
        gamma.y.push_back(s.gamma.value_or(NAN));
        sl.x.push_back(s.t);
        sl.y.push_back(1e3 * s.linear_entropy);
        q.x.push_back(s.t);
        q.y.push_back(1e2 * s.q.value_or(NAN));
        for (std::size_t k = 0; k < orders.size(); ++k) {
            const auto it = s.renyi.find(orders[k]);
            renyi[k].x.push_back(s.t);
            renyi[k].y.push_back(it == s.renyi.end() ? NAN : 1e3 * it->second);
        }
    }
    plot.series = {std::move(gamma), std::move(sl), std::move(q)};
    for (auto &r : renyi) {
        plot.series.push_back(std::move(r));
    }
    return plot;
}

PlotSpec measures_plot(std::span<const MeasurePoint> series) {
    PlotSpec plot;
    plot.title = "Accumulated non-Markovianity";
    plot.x_label = "t0";
    plot.y_label = "measure";
    plot.tail_fraction = 0;
    PlotSeries ns{"1e4 * N_S", "#d62728", {}, {}};
    PlotSeries ne{"N_e", "#1f77b4", {}, {}};
    for (const auto &m : series) {
        ns.x.push_back(m.t0);
        ns.y.push_back(1e4 * m.ns.value);
        ne.x.push_back(m.t0);
        ne.y.push_back(m.ne.value);
    }
    plot.series = {std::move(ns), std::move(ne)};
    return plot;
}

void write_text_file(const std::filesystem::path &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

}  // namespace choiwit
