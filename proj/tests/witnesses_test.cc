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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace choiwit;
using choiwit::test_util::random_hermitian;
using choiwit::test_util::random_state;
using choiwit::test_util::random_with_spectrum;

namespace {

const DephasingParams kDefault = DephasingParams::make(1, 1, 1e-4);

ComplexMatrix ket0() {
    return ComplexMatrix::diagonal({1, 0});
}

}  // namespace

TEST(witnesses, linear_entropy_examples) {
    ComplexMatrix bell(4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    EXPECT_NEAR(linear_entropy(bell), 0, 1e-15);
    EXPECT_NEAR(linear_entropy(ComplexMatrix::identity(4) * 0.25), 1, 1e-15);
    EXPECT_NEAR(linear_entropy(ComplexMatrix::diagonal({1.1, -0.1})), -0.44, 1e-14);
}

TEST(witnesses, linear_entropy_rejects_bad_input) {
    EXPECT_THROW(linear_entropy(ComplexMatrix::diagonal({0.5, 0.4})), std::invalid_argument);
    EXPECT_THROW(linear_entropy(ComplexMatrix{{0.5, 1}, {0, 0.5}}), std::invalid_argument);
    EXPECT_THROW(linear_entropy(ComplexMatrix::identity(1)), std::invalid_argument);
}

TEST(witnesses, renyi_examples) {
    ComplexMatrix bell(4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    EXPECT_NEAR(renyi_entropy(bell, 2), 0, 1e-12);
    EXPECT_NEAR(renyi_entropy(ComplexMatrix::identity(4) * 0.25, 2), 2, 1e-14);
    EXPECT_NEAR(renyi_entropy(ComplexMatrix::identity(4) * 0.25, 0.5), 2, 1e-12);
    EXPECT_NEAR(renyi_entropy(ComplexMatrix::identity(4) * 0.25, 7.3), 2, 1e-12);

    const ComplexMatrix c = choi_closed_form(kDefault, 4.8).matrix;
    EXPECT_NEAR(renyi_entropy(c, 2), -6.307796821975104e-3, 1e-14);
    EXPECT_NEAR(renyi_entropy(c, 5), -3.938082534183615e-3, 1e-14);
    EXPECT_NEAR(renyi_entropy(c, 10), -3.500517808179047e-3, 1e-14);
    EXPECT_NEAR(renyi_entropy(choi_closed_form(kDefault, std::numbers::pi).matrix, 2), 5.76962600755392e-4, 1e-15);
}

TEST(witnesses, renyi_errors) {
    const ComplexMatrix rho = ComplexMatrix::diagonal({0.7, 0.3});
    EXPECT_THROW(renyi_entropy(rho, 1), std::invalid_argument);
    EXPECT_THROW(renyi_entropy(rho, 0), std::invalid_argument);
    EXPECT_THROW(renyi_entropy(rho, -2), std::invalid_argument);

    const ComplexMatrix indefinite = ComplexMatrix::diagonal({1.1, -0.1});
    EXPECT_THROW(renyi_entropy(indefinite, 2.5), std::invalid_argument);
    EXPECT_NO_THROW(renyi_entropy(indefinite, 3));

    // Unit trace, Tr m^3 = 2 * 1.5^3 - 2^3 < 0.
    const ComplexMatrix strongly = ComplexMatrix::diagonal({1.5, 1.5, -2.0});
    try {
        renyi_entropy(strongly, 3);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("logarithm undefined"), std::string::npos);
    }
}

TEST(witnesses, sur_examples) {
    const Observable sx(pauli::x()), sy(pauli::y()), sz(pauli::z());
    EXPECT_NEAR(sur_q(sx, sy, ket0()), 0, 1e-15);
    EXPECT_NEAR(sur_q(sx, sy, ComplexMatrix::identity(2) * 0.5), 2, 1e-15);
    EXPECT_NEAR(sur_q(sz, sx, ComplexMatrix::diagonal({1.2, -0.2})), 0.04, 1e-14);
    EXPECT_NEAR(sur_product_gap(sx, sy, ket0()), 0, 1e-15);
    EXPECT_NEAR(sur_product_gap(sx, sy, ComplexMatrix::identity(2) * 0.5), 1, 1e-15);
}

TEST(witnesses, sur_errors) {
    EXPECT_THROW(Observable(ComplexMatrix{{0, 1}, {0, 0}}), std::invalid_argument);
    const Observable sx(pauli::x());
    const Observable big(ComplexMatrix::identity(3));
    EXPECT_THROW(sur_q(sx, big, ket0()), std::invalid_argument);
    EXPECT_THROW(sur_q(sx, sx, ComplexMatrix::identity(3) * (1.0 / 3)), std::invalid_argument);
}

TEST(witnesses, sur_holds_on_states) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
        const ComplexMatrix rho = random_state(rng, d);
        const Observable a(random_hermitian(rng, d)), b(random_hermitian(rng, d));
        EXPECT_GE(sur_q(a, b, rho), -1e-10);
        EXPECT_GE(sur_product_gap(a, b, rho), -1e-10);
    }
}

TEST(witnesses, theorem_on_random_cptp_maps) {
    const int orders[] = {2, 5, 10};
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const ChoiMatrix c = choi_from_superop(random_cptp(2, 1 + i % 4, 1000 + i));
        const double sl = linear_entropy(c.matrix);
        EXPECT_GE(sl, -1e-9);
        EXPECT_LE(sl, 1 + 1e-9);
        for (int a : orders) EXPECT_GE(renyi_entropy(c.matrix, a), -1e-9) << "draw " << i << " alpha " << a;
    }
}

TEST(witnesses, linear_entropy_eigenvalue_identity) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 5);
        // Unit-trace Hermitian, often indefinite.
        ComplexMatrix m = random_hermitian(rng, d) * 0.3;
        const Complex tr = mat_trace(m);
        for (std::size_t k = 0; k < d; ++k) m(k, k) += (1.0 - tr.real()) / static_cast<double>(d);
        const auto eig = hermitian_eigen(m);
        double sq = 0;
        for (double x : eig.eigenvalues) sq += x * x;
        const double dd = static_cast<double>(d);
        EXPECT_NEAR(linear_entropy(m), dd / (dd - 1) * (1 - sq), 1e-9);
    }
}

TEST(witnesses, renyi_two_sign_matches_linear_entropy) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-0.6, 1.0);
    int negatives = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
        std::vector<double> spec(d);
        double sum = 0;
        for (auto &x : spec) sum += (x = u(rng));
        if (std::abs(sum) < 0.1) continue;
        for (auto &x : spec) x /= sum;
        const ComplexMatrix m = random_with_spectrum(rng, spec);
        const double sl = linear_entropy(m), s2 = renyi_entropy(m, 2);
        if (std::abs(sl) < 1e-9) continue;
        EXPECT_EQ(sl < 0, s2 < 0) << "sl=" << sl << " s2=" << s2;
        negatives += sl < 0;
    }
    EXPECT_GT(negatives, 10);
}

TEST(witnesses, measures_vanish_before_first_sign_change) {
    EXPECT_EQ(measure_ns(kDefault, 4.0).value, 0);
    EXPECT_EQ(measure_ne(kDefault, 4.0).value, 0);
    EXPECT_EQ(measure_ne(kDefault, 4.0).excluded_span, 0);
}

TEST(witnesses, measures_are_nondecreasing) {
    double ns = 0, ne = 0;
    for (double t0 = 0.25; t0 <= 10; t0 += 0.25) {
        const double a = measure_ns(kDefault, t0).value, b = measure_ne(kDefault, t0).value;
        EXPECT_GE(a, ns) << t0;
        EXPECT_GE(b, ne) << t0;
        ns = a, ne = b;
    }
}

TEST(witnesses, measures_converge_under_refinement) {
    const Measure ns1 = measure_ns(kDefault, 6.5, {1e-3, kDefaultPoleExclusion});
    const Measure ns2 = measure_ns(kDefault, 6.5, {5e-4, kDefaultPoleExclusion});
    EXPECT_GT(ns1.value, 0);
    EXPECT_LT(std::abs(ns1.value - ns2.value), 0.01 * ns2.value);
    EXPECT_GT(ns1.excluded_span, 0);
    EXPECT_LE(ns1.excluded_span, 2 * kDefaultPoleExclusion + 2e-3);
}

TEST(witnesses, ne_matches_antiderivative) {
    // The integrand is positive on (pole, 2 pi); the first grid point past the exclusion zone is 4.763.
    const double a = 4.763, b = 2 * std::numbers::pi;
    const double exact = 2 * (gamma_antiderivative(kDefault, a) - gamma_antiderivative(kDefault, b));
    EXPECT_NEAR(exact, 10.280694458186551, 1e-9);
    const Measure ne = measure_ne(kDefault, 7.0);
    EXPECT_NEAR(ne.value, exact, 1e-4 * exact);
    EXPECT_EQ(measure_ne(kDefault, 7.0).value, measure_ne(kDefault, 7.5).value);
}

TEST(witnesses, measure_series_matches_single_points) {
    const std::vector<double> grid{0.5, 3.0, 4.9, 5.2371, 6.0, 6.5, 8.0, 10.0, 11.0};
    const std::vector<MeasurePoint> series = measure_series(kDefault, grid);
    ASSERT_EQ(series.size(), grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Measure ns = measure_ns(kDefault, grid[i]);
        const Measure ne = measure_ne(kDefault, grid[i]);
        EXPECT_EQ(series[i].t0, grid[i]);
        EXPECT_NEAR(series[i].ns.value, ns.value, 1e-12 * std::max(1.0, ns.value)) << grid[i];
        EXPECT_NEAR(series[i].ne.value, ne.value, 1e-12 * std::max(1.0, ne.value)) << grid[i];
        EXPECT_NEAR(series[i].ne.excluded_span, ne.excluded_span, 1e-12);
    }
}

TEST(witnesses, measures_increase_on_same_intervals) {
    const std::vector<double> grid = uniform_grid(10, 0.01);
    const std::vector<MeasurePoint> series = measure_series(kDefault, grid);
    for (std::size_t i = 1; i < series.size(); ++i) {
        const bool ns_up = series[i].ns.value > series[i - 1].ns.value;
        const bool ne_up = series[i].ne.value > series[i - 1].ne.value;
        EXPECT_EQ(ns_up, ne_up) << "t0=" << series[i].t0;
        if (series[i].t0 > 4.8 && series[i].t0 < 6.2) EXPECT_TRUE(ns_up) << series[i].t0;
        if (series[i].t0 < 4.7) EXPECT_FALSE(ns_up) << series[i].t0;
    }
}

TEST(witnesses, uniform_grid) {
    const std::vector<double> g = uniform_grid(10, 0.01);
    ASSERT_EQ(g.size(), 1000u);
    EXPECT_EQ(g.front(), 0.01);
    EXPECT_EQ(g[479], 4.8);
    EXPECT_EQ(g[313], 3.14);
    EXPECT_EQ(g.back(), 10);
    EXPECT_EQ(uniform_grid(1, 0.5, true), (std::vector<double>{0, 0.5, 1}));
    EXPECT_THROW(uniform_grid(1, 0), std::invalid_argument);
    EXPECT_THROW(uniform_grid(-1, 0.1), std::invalid_argument);
}

TEST(witnesses, scan_sign_structure) {
    std::vector<double> grid;
    for (int k = 1; k <= 20; ++k) grid.push_back(0.5 * k);
    const ScanResult r = witness_scan(kDefault, grid);
    EXPECT_TRUE(r.skipped.empty());
    ASSERT_EQ(r.samples.size(), grid.size());
    for (const auto &s : r.samples) {
        ASSERT_TRUE(s.gamma.has_value());
        if (*s.gamma > 0) {
            EXPECT_GT(s.linear_entropy, 0) << s.t;
            for (const auto &[a, v] : s.renyi) EXPECT_GT(v, 0) << s.t << " alpha " << a;
        } else {
            EXPECT_LT(s.linear_entropy, 0) << s.t;
        }
    }
}

TEST(witnesses, scan_at_comparison_point) {
    const std::vector<double> grid{4.8};
    const ScanResult r = witness_scan(kDefault, grid);
    ASSERT_EQ(r.samples.size(), 1u);
    const WitnessSample &s = r.samples[0];
    EXPECT_NEAR(*s.gamma, -21.813574859612865, 1e-11);
    EXPECT_NEAR(s.linear_entropy, -5.842404976894847e-3, 1e-15);
    EXPECT_NEAR(*s.q, 0.24123639253465773, 1e-14);
    EXPECT_NEAR(s.min_eigenvalue(), -2.186122733728643e-3, 1e-15);
    EXPECT_LT(s.linear_entropy, 0);
    EXPECT_GT(*s.q, 0);
    double sum = 0;
    for (double x : s.choi_eigenvalues) sum += x;
    EXPECT_NEAR(sum, 1, 1e-12);
}

TEST(witnesses, scan_skips_pole_neighbourhood) {
    const std::vector<double> grid{4.0, 4.7, 4.72, 4.8};
    const ScanResult r = witness_scan(kDefault, grid);
    EXPECT_EQ(r.skipped, (std::vector<double>{4.7, 4.72}));
    ASSERT_EQ(r.samples.size(), 2u);
    EXPECT_EQ(r.samples[0].t, 4.0);
    EXPECT_EQ(r.samples[1].t, 4.8);
}

TEST(witnesses, scan_both_modes_agree) {
    ScanOptions opts;
    opts.mode = ScanMode::both;
    const std::vector<double> grid = uniform_grid(10, 0.25);
    const ScanResult r = witness_scan(kDefault, grid, opts);
    EXPECT_LT(r.max_discrepancy, 1e-5);
    for (const auto &s : r.samples) {
        ASSERT_TRUE(s.numerical_linear_entropy.has_value());
        EXPECT_NEAR(*s.numerical_linear_entropy, s.linear_entropy, 1e-5);
        EXPECT_LE(*s.choi_discrepancy, r.max_discrepancy);
    }

    opts.mode = ScanMode::numerical;
    const ScanResult n = witness_scan(kDefault, grid, opts);
    ASSERT_EQ(n.samples.size(), r.samples.size());
    for (std::size_t i = 0; i < n.samples.size(); ++i) {
        EXPECT_NEAR(n.samples[i].linear_entropy, r.samples[i].linear_entropy, 1e-5);
    }
}

TEST(witnesses, scan_is_thread_count_invariant) {
    const std::vector<double> grid = uniform_grid(10, 0.01);
    ScanOptions one, many;
    one.threads = 1;
    many.threads = 7;
    const ScanResult a = witness_scan(kDefault, grid, one), b = witness_scan(kDefault, grid, many);
    ASSERT_EQ(a.samples.size(), b.samples.size());
    EXPECT_EQ(a.skipped, b.skipped);
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        EXPECT_EQ(a.samples[i].t, b.samples[i].t);
        EXPECT_EQ(a.samples[i].linear_entropy, b.samples[i].linear_entropy);
        EXPECT_EQ(a.samples[i].choi_eigenvalues, b.samples[i].choi_eigenvalues);
    }
}
