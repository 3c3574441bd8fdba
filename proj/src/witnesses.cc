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

#include "choiwit/witnesses.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "choiwit/choi.h"

namespace choiwit {

namespace {

void require_state_like(const ComplexMatrix &m, double tol, const char *what) {
    if (!m.is_hermitian(tol)) {
        throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian within tolerance");
    }
    const Complex tr = mat_trace(m);
    if (std::abs(tr - 1.0) > tol) {
        throw std::invalid_argument(std::string(what) + ": matrix does not have unit trace");
    }
}

bool is_integer(double x) {
    return std::isfinite(x) && x == std::floor(x);
}

double expectation(const ComplexMatrix &rho, const ComplexMatrix &op) {
    return mat_trace(mat_mul(rho, op)).real();
}

struct SurTerms {
    double var_a;
    double var_b;
    double commutator_sq;      // |<[A,B]>|^2
    double anticommutator_sq;  // |<{A - <A>, B - <B>}>|^2
};

SurTerms sur_terms(const Observable &a, const Observable &b, const ComplexMatrix &rho, double tol, const char *what) {
    if (a.dim() != b.dim() || a.dim() != rho.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
    require_state_like(rho, tol, what);
    const ComplexMatrix &am = a.matrix();
    const ComplexMatrix &bm = b.matrix();
    const std::size_t n = rho.dim();
    const ComplexMatrix id = ComplexMatrix::identity(n);

    const double mean_a = expectation(rho, am);
    const double mean_b = expectation(rho, bm);
    const ComplexMatrix a_c = am - id * mean_a;
    const ComplexMatrix b_c = bm - id * mean_b;

    SurTerms out{};
    out.var_a = expectation(rho, mat_mul(am, am)) - mean_a * mean_a;
    out.var_b = expectation(rho, mat_mul(bm, bm)) - mean_b * mean_b;
    const ComplexMatrix ab = mat_mul(am, bm);
    const ComplexMatrix ba = mat_mul(bm, am);
    out.commutator_sq = std::norm(mat_trace(mat_mul(rho, ab - ba)));
    out.anticommutator_sq = std::norm(mat_trace(mat_mul(rho, mat_mul(a_c, b_c) + mat_mul(b_c, a_c))));
    return out;
}

double integer_power(double x, int n) {
    double r = 1;
    for (int k = 0; k < n; ++k) {
        r *= x;
    }
    return r;
}

// Integrand evaluation for the measures. Returns nullopt inside an exclusion zone.
struct Integrands {
    double ns;
    double ne;
};

std::optional<Integrands> measure_integrands(const DephasingParams &p, double t, double exclusion) {
    if (distance_to_nearest_pole(p, t) <= exclusion) {
        return std::nullopt;
    }
    return Integrands{
        std::max(0.0, -linear_entropy_closed_form(p, t)),
        std::max(0.0, -2 * gamma_t(p, t)),
    };
}

}  // namespace

double linear_entropy(const ComplexMatrix &m, double tol) {
    require_state_like(m, tol, "linear_entropy");
    if (m.dim() < 2) {
        throw std::invalid_argument("linear_entropy: dimension must be at least 2");
    }
    const double d = static_cast<double>(m.dim());
    // Tr(m^2) = sum |m_ij|^2 for Hermitian m.
    double purity = 0;
    for (const auto &e : m.entries()) {
        purity += std::norm(e);
    }
    return d / (d - 1) * (1 - purity);
}

double renyi_entropy_from_spectrum(std::span<const double> eigenvalues, double alpha, double tol) {
    if (!(alpha > 0) || alpha == 1 || !std::isfinite(alpha)) {
        throw std::invalid_argument("renyi_entropy: order must lie in (0,1) or (1,inf)");
    }
    const double smallest = *std::min_element(eigenvalues.begin(), eigenvalues.end());
    const bool psd = smallest >= -tol;
    if (!psd && !(is_integer(alpha) && alpha >= 2)) {
        throw std::invalid_argument(
            "renyi_entropy: fractional order is undefined on a matrix with negative eigenvalues");
    }
    double sum = 0;
    if (is_integer(alpha)) {
        const int n = static_cast<int>(alpha);
        for (double x : eigenvalues) {
            sum += integer_power(psd ? std::max(x, 0.0) : x, n);
        }
    } else {
        for (double x : eigenvalues) {
            sum += std::pow(std::max(x, 0.0), alpha);
        }
    }
    if (!(sum > 0)) {
        throw std::invalid_argument("renyi_entropy: logarithm undefined, Tr(rho^alpha) <= 0");
    }
    return std::log2(sum) / (1 - alpha);
}

double renyi_entropy(const ComplexMatrix &m, double alpha, double tol) {
    require_state_like(m, tol, "renyi_entropy");
    const HermitianEigenSystem eig = hermitian_eigen(hermitian_part(m), tol);
    return renyi_entropy_from_spectrum(eig.eigenvalues, alpha, tol);
}

Observable::Observable(ComplexMatrix matrix, double tol) : matrix_(std::move(matrix)) {
    if (!matrix_.is_hermitian(tol)) {
        throw std::invalid_argument("Observable: matrix is not Hermitian within tolerance");
    }
}

double sur_q(const Observable &a, const Observable &b, const ComplexMatrix &rho, double tol) {
    const SurTerms s = sur_terms(a, b, rho, tol, "sur_q");
    return s.var_a + s.var_b - std::sqrt(s.commutator_sq + s.anticommutator_sq);
}

double sur_product_gap(const Observable &a, const Observable &b, const ComplexMatrix &rho, double tol) {
    const SurTerms s = sur_terms(a, b, rho, tol, "sur_product_gap");
    return s.var_a * s.var_b - 0.25 * s.commutator_sq - 0.25 * s.anticommutator_sq;
}

std::vector<MeasurePoint> measure_series(const DephasingParams &p, std::span<const double> t0_grid,
                                         const MeasureOptions &opts) {
    if (!(opts.grid_step > 0)) {
        throw std::invalid_argument("measure: grid_step must be positive");
    }
    if (!std::is_sorted(t0_grid.begin(), t0_grid.end())) {
        throw std::invalid_argument("measure: t0 grid must be ascending");
    }
    std::vector<MeasurePoint> out;
    out.reserve(t0_grid.size());
    if (t0_grid.empty()) {
        return out;
    }

    const double inv = 1 / opts.grid_step;
    const double inv_rounded = std::round(inv);
    const bool decimal = std::abs(inv - inv_rounded) < 1e-9 * inv;
    auto node = [&](long k) { return decimal ? k / inv_rounded : k * opts.grid_step; };

    Measure ns;
    Measure ne;
    long k = 0;
    double t_prev = 0;
    std::optional<Integrands> f_prev = measure_integrands(p, 0.0, opts.pole_exclusion);

    auto advance = [&](double t_next, const std::optional<Integrands> &f_next, Measure &ns_acc, Measure &ne_acc) {
        const double h = t_next - t_prev;
        if (h <= 0) {
            return;
        }
        if (f_prev && f_next) {
            ns_acc.value += 0.5 * h * (f_prev->ns + f_next->ns);
            ne_acc.value += 0.5 * h * (f_prev->ne + f_next->ne);
        } else {
            ns_acc.excluded_span += h;
            ne_acc.excluded_span += h;
        }
    };

    for (double t0 : t0_grid) {
        if (!(t0 >= 0)) {
            throw std::invalid_argument("measure: t0 must be nonnegative");
        }
        while (node(k + 1) <= t0) {
            const double t_next = node(k + 1);
            const auto f_next = measure_integrands(p, t_next, opts.pole_exclusion);
            advance(t_next, f_next, ns, ne);
            t_prev = t_next;
            f_prev = f_next;
            ++k;
        }
        // Partial trapezoid from the last node up to an off-grid t0.
        Measure ns_at = ns;
        Measure ne_at = ne;
        if (t0 > t_prev) {
            advance(t0, measure_integrands(p, t0, opts.pole_exclusion), ns_at, ne_at);
        }
        out.push_back(MeasurePoint{t0, ns_at, ne_at});
    }
    return out;
}

Measure measure_ns(const DephasingParams &p, double t0, const MeasureOptions &opts) {
    const double grid[] = {t0};
    return measure_series(p, grid, opts).front().ns;
}

Measure measure_ne(const DephasingParams &p, double t0, const MeasureOptions &opts) {
    const double grid[] = {t0};
    return measure_series(p, grid, opts).front().ne;
}

namespace {

bool inside_exclusion(const DephasingParams &p, double t, double exclusion, bool numerical) {
    if (distance_to_nearest_pole(p, t) <= exclusion) {
        return true;
    }
    if (!numerical) {
        return false;
    }
    // Propagation covers [t, t + eps]; keep the whole interval clear.
    for (double pole : pole_locations(p, t + p.epsilon + exclusion)) {
        if (pole >= t - exclusion && pole <= t + p.epsilon + exclusion) {
            return true;
        }
    }
    return false;
}

void fill_spectral(WitnessSample &s, const ComplexMatrix &choi, std::span<const int> orders) {
    const ComplexMatrix sym = hermitian_part(choi);
    const HermitianEigenSystem eig = hermitian_eigen(sym);
    s.choi_eigenvalues = eig.eigenvalues;
    s.linear_entropy = linear_entropy(sym);
    for (int alpha : orders) {
        try {
            s.renyi[alpha] = renyi_entropy_from_spectrum(eig.eigenvalues, alpha);
        } catch (const std::invalid_argument &) {
            s.renyi[alpha] = std::numeric_limits<double>::quiet_NaN();
        }
    }
}

WitnessSample evaluate_point(const DephasingParams &p, const LindbladGenerator &gen, double t,
                             const ScanOptions &opts) {
    WitnessSample s;
    s.t = t;
    s.gamma = gamma_t(p, t);
    s.q = q_closed_form(p, t);
    if (opts.mode == ScanMode::numerical) {
        fill_spectral(s, choi_from_superop(intermediate_map(gen, t, p.epsilon, opts.rk4_steps)).matrix,
                      opts.renyi_orders);
        return s;
    }
    const ChoiMatrix closed = choi_closed_form(p, t);
    fill_spectral(s, closed.matrix, opts.renyi_orders);
    if (opts.mode == ScanMode::both) {
        const ChoiMatrix numeric = choi_from_superop(intermediate_map(gen, t, p.epsilon, opts.rk4_steps));
        s.numerical_linear_entropy = linear_entropy(hermitian_part(numeric.matrix));
        s.choi_discrepancy = max_abs_diff(closed.matrix, numeric.matrix);
    }
    return s;
}

}  // namespace

ScanResult witness_scan(const DephasingParams &p, std::span<const double> t_grid, const ScanOptions &opts) {
    p.validate();
    for (int alpha : opts.renyi_orders) {
        if (alpha < 2) {
            throw std::invalid_argument("witness_scan: Renyi orders must be integers >= 2");
        }
    }
    const bool numerical = opts.mode != ScanMode::closed_form;
    const LindbladGenerator gen = dephasing_generator(p);

    ScanResult result;
    std::vector<double> kept;
    for (double t : t_grid) {
        if (inside_exclusion(p, t, opts.pole_exclusion, numerical)) {
            result.skipped.push_back(t);
        } else {
            kept.push_back(t);
        }
    }
    result.samples.resize(kept.size());

    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    if (!numerical) {
        threads = 1;
    }
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, kept.size()));
    const std::size_t chunk = (kept.size() + threads - 1) / std::max(1u, threads);

    // Each worker writes a disjoint slice, so output order matches the grid.
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(kept.size(), begin + chunk);
        if (begin >= end) {
            break;
        }
        auto job = [&, begin, end] {
            for (std::size_t i = begin; i < end; ++i) {
                result.samples[i] = evaluate_point(p, gen, kept[i], opts);
            }
        };
        if (threads == 1) {
            job();
        } else {
            workers.push_back(std::async(std::launch::async, job));
        }
    }
    for (auto &w : workers) {
        w.get();
    }
    for (const auto &s : result.samples) {
        if (s.choi_discrepancy) {
            result.max_discrepancy = std::max(result.max_discrepancy, *s.choi_discrepancy);
        }
    }
    return result;
}

std::vector<double> uniform_grid(double t_max, double step, bool include_zero) {
    if (!(step > 0) || !(t_max >= 0)) {
        throw std::invalid_argument("uniform_grid: step must be positive and t_max nonnegative");
    }
    const double inv = 1 / step;
    const double inv_rounded = std::round(inv);
    const bool decimal = std::abs(inv - inv_rounded) < 1e-9 * inv;
    std::vector<double> grid;
    if (include_zero) {
        grid.push_back(0.0);
    }
    // Small slack so t_max itself survives rounding (e.g. 1000 * 0.01).
    const double limit = t_max * (1 + 1e-12);
    for (long k = 1;; ++k) {
        const double t = decimal ? k / inv_rounded : k * step;
        if (t > limit) {
            break;
        }
        grid.push_back(t);
    }
    return grid;
}

}  // namespace choiwit
