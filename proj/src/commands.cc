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

#include "choiwit/commands.h"

#include <ostream>
#include <string>
#include <system_error>

#include "choiwit/report.h"
#include "choiwit/verify.h"

namespace choiwit {

namespace {

void prepare_output_dir(const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string() + (ec ? ": " + ec.message() : ""));
    }
}

}  // namespace

void run_scan(const RunConfig &cfg, std::ostream &log) {
    cfg.validate();
    const DephasingParams p = cfg.params();
    ScanOptions opts;
    opts.renyi_orders = cfg.renyi_orders;
    opts.mode = cfg.mode;
    opts.pole_exclusion = cfg.pole_exclusion;

    const std::vector<double> grid = uniform_grid(cfg.t_max, cfg.grid_step);
    const ScanResult scan = witness_scan(p, grid, opts);
    for (double t : scan.skipped) {
        log << "skipped t=" << format_double(t) << " (within " << cfg.pole_exclusion << " of a pole)\n";
    }
    if (cfg.mode == ScanMode::both) {
        log << "max |C_closed - C_rk4| = " << format_double(scan.max_discrepancy) << '\n';
    }

    // Render both documents before touching the filesystem.
    const std::string csv = scan_csv(scan, cfg.renyi_orders, cfg.mode);
    const std::string svg = render_svg(scan_plot(scan, cfg.renyi_orders));
    prepare_output_dir(cfg.output_dir);
    write_text_file(cfg.output_dir / "scan.csv", csv);
    write_text_file(cfg.output_dir / "scan.svg", svg);
}

void run_measures(const RunConfig &cfg, std::ostream &log) {
    cfg.validate();
    const DephasingParams p = cfg.params();
    MeasureOptions opts;
    opts.pole_exclusion = cfg.pole_exclusion;

    const std::vector<double> grid = uniform_grid(cfg.t_max, cfg.grid_step);
    const std::vector<MeasurePoint> series = measure_series(p, grid, opts);
    if (!series.empty() && series.back().ne.excluded_span > 0) {
        log << "excluded " << format_double(series.back().ne.excluded_span)
            << " time units around poles from the integrals\n";
    }
    const std::string csv = measures_csv(series);
    const std::string svg = render_svg(measures_plot(series));
    prepare_output_dir(cfg.output_dir);
    write_text_file(cfg.output_dir / "measures.csv", csv);
    write_text_file(cfg.output_dir / "measures.svg", svg);
}

int run_verify_command(const RunConfig &cfg, std::ostream &report) {
    cfg.validate();
    const std::vector<CheckResult> results = run_verify(cfg, report);
    int failed = 0;
    for (const auto &r : results) {
        if (!r.passed) {
            report << "invariant failed: " << r.name << '\n';
            ++failed;
        }
    }
    report << (failed == 0 ? "all invariants hold\n" : std::to_string(failed) + " invariant(s) failed\n");
    return failed == 0 ? kExitOk : kExitInvariant;
}

}  // namespace choiwit
