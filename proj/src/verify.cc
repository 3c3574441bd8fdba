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

#include "choiwit/verify.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "choiwit/choi.h"
#include "choiwit/witnesses.h"

namespace choiwit {

namespace {

constexpr double kTheoremTol = 1e-9;
constexpr double kSignGammaFloor = 1e-8;
constexpr double kOracleGammaCap = 100;
constexpr double kRk4RatioTarget = 16;
constexpr double kRk4RatioSlack = 3;

std::string describe(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

ComplexMatrix random_matrix(std::mt19937_64 &rng, std::size_t d) {
    std::normal_distribution<double> normal;
    ComplexMatrix m(d);
    for (auto &e : m.entries()) {
        const double re = normal(rng);
        e = Complex{re, normal(rng)};
    }
    return m;
}

// Points on the scan grid where the sign check applies.
std::vector<double> sign_grid(const RunConfig &cfg) {
    const DephasingParams p = cfg.params();
    std::vector<double> out;
    for (double t : uniform_grid(cfg.t_max, cfg.grid_step)) {
        if (distance_to_nearest_pole(p, t) > cfg.pole_exclusion && std::abs(gamma_t(p, t)) > kSignGammaFloor) {
            out.push_back(t);
        }
    }
    return out;
}

}  // namespace

CheckResult check_random_cptp_theorem(std::uint64_t seed, std::span<const int> orders, int draws) {
    CheckResult r{"theorem.random_cptp", true, {}};
    int violations = 0;
    double worst_min_eig = INFINITY;
    for (int i = 0; i < draws; ++i) {
        const std::size_t kraus_count = 1 + static_cast<std::size_t>(i % 4);
        const Superoperator s = random_cptp(2, kraus_count, seed + static_cast<std::uint64_t>(i));
        const ChoiMatrix c = choi_from_superop(s);
        const ComplexMatrix sym = hermitian_part(c.matrix);
        const HermitianEigenSystem eig = hermitian_eigen(sym);
        worst_min_eig = std::min(worst_min_eig, eig.eigenvalues.front());
        bool ok = eig.eigenvalues.front() >= -kTheoremTol && eig.eigenvalues.back() <= 1 + kTheoremTol;
        ok = ok && std::abs(mat_trace(c.matrix) - 1.0) <= kTheoremTol;
        const double sl = linear_entropy(sym);
        ok = ok && sl >= -kTheoremTol && sl <= 1 + kTheoremTol;
        for (int a : orders) {
            ok = ok && renyi_entropy_from_spectrum(eig.eigenvalues, a) >= -kTheoremTol;
        }
        violations += ok ? 0 : 1;
    }
    r.passed = violations == 0;
    r.detail = std::to_string(draws) + " draws, " + std::to_string(violations) +
               " violations, smallest Choi eigenvalue " + describe(worst_min_eig);
    return r;
}

double oracle_tolerance(double epsilon) {
    const double scale = epsilon / 1e-4;
    return 1e-5 * std::max(1.0, scale * scale);
}

CheckResult check_closed_form_oracle(const RunConfig &cfg, int points) {
    CheckResult r{"oracle.closed_form_vs_rk4", true, {}};
    const DephasingParams p = cfg.params();
    const LindbladGenerator gen = dephasing_generator(p);

    // Candidates on a grid 10x finer than needed, then evenly thinned.
    std::vector<double> valid;
    const int candidates = points * 10;
    for (int k = 1; k <= candidates; ++k) {
        const double t = cfg.t_max * k / candidates;
        bool clear = distance_to_nearest_pole(p, t) > cfg.pole_exclusion;
        for (double pole : pole_locations(p, t + p.epsilon + cfg.pole_exclusion)) {
            clear = clear && !(pole >= t && pole <= t + p.epsilon + cfg.pole_exclusion);
        }
        if (clear && std::abs(gamma_t(p, t)) <= kOracleGammaCap) {
            valid.push_back(t);
        }
    }
    if (valid.size() < static_cast<std::size_t>(points)) {
        r.passed = false;
        r.detail = "only " + std::to_string(valid.size()) + " admissible points";
        return r;
    }
    const double tol = oracle_tolerance(p.epsilon);
    double worst = 0;
    double worst_trace = 0;
    double worst_herm = 0;
    for (int k = 0; k < points; ++k) {
        const double t = valid[static_cast<std::size_t>(k) * valid.size() / static_cast<std::size_t>(points)];
        const ChoiMatrix numeric = choi_from_superop(intermediate_map(gen, t, p.epsilon, kDefaultRk4Steps));
        worst = std::max(worst, max_abs_diff(numeric.matrix, choi_closed_form(p, t).matrix));
        worst_trace = std::max(worst_trace, std::abs(mat_trace(numeric.matrix) - 1.0));
        worst_herm = std::max(worst_herm, max_abs_diff(numeric.matrix, dagger(numeric.matrix)));
    }
    r.passed = worst <= tol && worst_trace <= 1e-9 && worst_herm <= 1e-9;
    r.detail = std::to_string(points) + " points, max |C_rk4 - C_closed| = " + describe(worst) + " (tol " +
               describe(tol) + "), trace err " + describe(worst_trace) + ", hermiticity err " + describe(worst_herm);
    return r;
}

CheckResult check_linear_entropy_sign(const RunConfig &cfg) {
    CheckResult r{"sign.linear_entropy", true, {}};
    const DephasingParams p = cfg.params();
    const std::vector<double> grid = sign_grid(cfg);
    int mismatches = 0;
    int negative = 0;
    for (double t : grid) {
        const double g = gamma_t(p, t);
        const double sl = linear_entropy(choi_closed_form(p, t).matrix);
        negative += g < 0 ? 1 : 0;
        mismatches += (sl < 0) != (g < 0) ? 1 : 0;
    }
    r.passed = mismatches == 0 && !grid.empty();
    r.detail = std::to_string(grid.size()) + " points (" + std::to_string(negative) + " with gamma < 0), " +
               std::to_string(mismatches) + " sign mismatches";
    return r;
}

CheckResult check_renyi_sign(const RunConfig &cfg) {
    CheckResult r{"sign.renyi", true, {}};
    const DephasingParams p = cfg.params();
    const std::vector<double> grid = sign_grid(cfg);
    int mismatches = 0;
    for (double t : grid) {
        const double g = gamma_t(p, t);
        const ChoiMatrix c = choi_closed_form(p, t);
        const HermitianEigenSystem eig = hermitian_eigen(c.matrix);
        for (int a : cfg.renyi_orders) {
            double s = NAN;
            try {
                s = renyi_entropy_from_spectrum(eig.eigenvalues, a);
            } catch (const std::invalid_argument &) {
            }
            mismatches += (std::isnan(s) || (s < 0) != (g < 0)) ? 1 : 0;
        }
    }
    r.passed = mismatches == 0 && !grid.empty();
    r.detail = std::to_string(grid.size()) + " points x " + std::to_string(cfg.renyi_orders.size()) + " orders, " +
               std::to_string(mismatches) + " sign mismatches";
    return r;
}

Rk4OrderCheck measure_rk4_order(const DephasingParams &p, int coarse_steps) {
    Rk4OrderCheck out{};
    const std::vector<double> poles = pole_locations(p, 1e6);
    if (poles.empty()) {
        out.interval_start = 0.5;
        out.interval_length = 2.0;
    } else {
        out.interval_start = 0.2 * poles.front();
        out.interval_length = 0.4 * poles.front();
    }
    const double a = out.interval_start;
    const double b = a + out.interval_length;
    const double exact = 0.5 * std::exp(-2 * (gamma_antiderivative(p, b) - gamma_antiderivative(p, a)));
    const LindbladGenerator gen = dephasing_generator(p);
    auto residual = [&](int steps) {
        const ChoiMatrix c = choi_from_superop(intermediate_map(gen, a, out.interval_length, steps));
        return std::abs(c.matrix(0, 3) - exact);
    };
    out.residual_coarse = residual(coarse_steps);
    out.residual_fine = residual(2 * coarse_steps);
    out.ratio = out.residual_coarse / out.residual_fine;
    return out;
}

CheckResult check_rk4_order(const RunConfig &cfg) {
    CheckResult r{"rk4.order", true, {}};
    const Rk4OrderCheck c = measure_rk4_order(cfg.params());
    r.passed = std::abs(c.ratio - kRk4RatioTarget) <= kRk4RatioSlack;
    r.detail = "residuals " + describe(c.residual_coarse) + " / " + describe(c.residual_fine) + " over [" +
               describe(c.interval_start) + ", " + describe(c.interval_start + c.interval_length) +
               "], ratio " + describe(c.ratio) + " (expect 16 +- 3)";
    return r;
}

CheckResult check_sur_on_states(std::uint64_t seed, int draws) {
    CheckResult r{"sur.states", true, {}};
    std::mt19937_64 rng(seed);
    double worst_q = INFINITY;
    double worst_gap = INFINITY;
    for (int i = 0; i < draws; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
        const ComplexMatrix g = random_matrix(rng, d);
        ComplexMatrix rho = mat_mul(g, dagger(g));
        rho *= 1.0 / mat_trace(rho).real();
        rho = hermitian_part(rho);
        const Observable a(hermitian_part(random_matrix(rng, d)));
        const Observable b(hermitian_part(random_matrix(rng, d)));
        worst_q = std::min(worst_q, sur_q(a, b, rho));
        worst_gap = std::min(worst_gap, sur_product_gap(a, b, rho));
    }
    r.passed = worst_q >= -1e-10 && worst_gap >= -1e-10;
    r.detail = std::to_string(draws) + " draws, min Q " + describe(worst_q) + ", min product gap " +
               describe(worst_gap);
    return r;
}

CheckResult check_measures(const RunConfig &cfg) {
    CheckResult r{"measures.shared_support", true, {}};
    const DephasingParams p = cfg.params();
    const std::vector<double> grid = uniform_grid(cfg.t_max, cfg.grid_step);
    MeasureOptions opts;
    opts.pole_exclusion = cfg.pole_exclusion;
    const std::vector<MeasurePoint> series = measure_series(p, grid, opts);
    int decreasing = 0;
    int support_mismatch = 0;
    for (std::size_t i = 1; i < series.size(); ++i) {
        const double dns = series[i].ns.value - series[i - 1].ns.value;
        const double dne = series[i].ne.value - series[i - 1].ne.value;
        decreasing += (dns < 0 || dne < 0) ? 1 : 0;
        support_mismatch += (dns > 0) != (dne > 0) ? 1 : 0;
    }
    r.passed = decreasing == 0 && support_mismatch == 0;
    r.detail = std::to_string(series.size()) + " t0 values, " + std::to_string(decreasing) + " decreases, " +
               std::to_string(support_mismatch) + " support mismatches; N_S(t_max) = " +
               describe(series.empty() ? 0 : series.back().ns.value) +
               ", N_e(t_max) = " + describe(series.empty() ? 0 : series.back().ne.value);
    return r;
}

std::vector<CheckResult> run_verify(const RunConfig &cfg, std::ostream &report) {
    std::vector<CheckResult> results;
    results.push_back(check_random_cptp_theorem(cfg.seed, cfg.renyi_orders));
    results.push_back(check_closed_form_oracle(cfg));
    results.push_back(check_linear_entropy_sign(cfg));
    results.push_back(check_renyi_sign(cfg));
    results.push_back(check_rk4_order(cfg));
    results.push_back(check_sur_on_states(cfg.seed));
    results.push_back(check_measures(cfg));
    for (const auto &c : results) {
        report << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    return results;
}

}  // namespace choiwit
