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

#ifndef CHOIWIT_VERIFY_H
#define CHOIWIT_VERIFY_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "choiwit/run_config.h"

namespace choiwit {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// 1000 seeded random CPTP qubit maps (1-4 Kraus operators): Choi spectrum in
/// [-1e-9, 1+1e-9], unit trace, S_l in [-1e-9, 1+1e-9], S_alpha >= -1e-9.
CheckResult check_random_cptp_theorem(std::uint64_t seed, std::span<const int> orders, int draws = 1000);

/// RK4 Choi matrix against the closed form at 50 pole-free points with
/// |gamma| <= 100. The elementwise tolerance is 1e-5 at eps = 1e-4 and grows
/// as eps^2 (the closed form is first order in eps).
CheckResult check_closed_form_oracle(const RunConfig &cfg, int points = 50);

/// Tolerance used by check_closed_form_oracle.
double oracle_tolerance(double epsilon);

/// S_l < 0 <=> gamma < 0 on the scan grid (pole-excluded, |gamma| > 1e-8).
CheckResult check_linear_entropy_sign(const RunConfig &cfg);

/// S_alpha < 0 <=> gamma < 0 for every configured order.
CheckResult check_renyi_sign(const RunConfig &cfg);

/// Ratio of RK4 residuals (against the exact dephasing solution) for n and
/// 2n substeps over a pole-free interval long enough for truncation error to
/// dominate rounding.
struct Rk4OrderCheck {
    double interval_start;
    double interval_length;
    double residual_coarse;
    double residual_fine;
    double ratio;
};
Rk4OrderCheck measure_rk4_order(const DephasingParams &p, int coarse_steps = 32);
CheckResult check_rk4_order(const RunConfig &cfg);

/// Sum and product uncertainty relations on random states and observables.
CheckResult check_sur_on_states(std::uint64_t seed, int draws = 200);

/// N_S and N_e nondecreasing, and growing on the same t0 intervals.
CheckResult check_measures(const RunConfig &cfg);

/// Runs every check, prints one PASS/FAIL line each, returns the results.
std::vector<CheckResult> run_verify(const RunConfig &cfg, std::ostream &report);

}  // namespace choiwit

#endif
