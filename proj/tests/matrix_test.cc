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

#include "choiwit/matrix.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace choiwit;
using choiwit::test_util::random_hermitian;

TEST(matrix, construction_rejects_bad_shapes) {
    EXPECT_THROW(ComplexMatrix(0), std::invalid_argument);
    EXPECT_THROW(ComplexMatrix(2, std::vector<Complex>(3)), std::invalid_argument);
    EXPECT_THROW((ComplexMatrix{{1, 2}, {3}}), std::invalid_argument);
    ComplexMatrix m(3);
    EXPECT_EQ(m.dim(), 3u);
    EXPECT_EQ(m.entries().size(), 9u);
}

TEST(matrix, mat_mul) {
    EXPECT_EQ(mat_mul(ComplexMatrix::identity(2), pauli::z()), pauli::z());
    EXPECT_EQ(mat_mul(pauli::x(), pauli::x()), ComplexMatrix::identity(2));
    // sigma_x sigma_y = i sigma_z
    EXPECT_EQ(mat_mul(pauli::x(), pauli::y()), (pauli::z() * Complex{0, 1}));
    EXPECT_THROW(mat_mul(ComplexMatrix(2), ComplexMatrix(3)), std::invalid_argument);
}

TEST(matrix, kron) {
    EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
    EXPECT_EQ(kron(pauli::z(), ComplexMatrix::identity(2)), ComplexMatrix::diagonal({1, 1, -1, -1}));
    EXPECT_EQ(kron(ComplexMatrix::diagonal({2, 3}), ComplexMatrix::diagonal({5, 7})),
              ComplexMatrix::diagonal({10, 14, 15, 21}));

    const ComplexMatrix a = pauli::x();
    const ComplexMatrix b{{1, Complex{0, 2}}, {3, 4}};
    const ComplexMatrix k = kron(a, b);
    ASSERT_EQ(k.dim(), 4u);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(k(i * 2 + r, j * 2 + c), a(i, j) * b(r, c));
}

TEST(matrix, kron_associative) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    auto rnd = [&](std::size_t n) {
        ComplexMatrix m(n);
        // Small integers keep every product exact.
        for (auto &e : m.entries()) e = Complex{std::round(4 * u(rng)), std::round(4 * u(rng))};
        return m;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = rnd(2), b = rnd(3), c = rnd(2);
        EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
    }
}

TEST(matrix, trace_and_dagger) {
    EXPECT_EQ(mat_trace(ComplexMatrix::identity(4)), Complex{4});
    EXPECT_EQ(mat_trace(pauli::z()), Complex{0});

    EXPECT_EQ(dagger(pauli::y()), pauli::y());
    EXPECT_EQ(dagger(ComplexMatrix::identity(2) * Complex{0, 1}), (ComplexMatrix::identity(2) * Complex{0, -1}));
    EXPECT_EQ(dagger(ComplexMatrix{{0, 1}, {0, 0}}), (ComplexMatrix{{0, 0}, {1, 0}}));
}

TEST(matrix, is_hermitian) {
    EXPECT_TRUE(pauli::y().is_hermitian());
    EXPECT_FALSE((ComplexMatrix{{0, 1}, {0, 0}}).is_hermitian());
    ComplexMatrix almost = pauli::x();
    almost(0, 1) += 1e-11;
    EXPECT_TRUE(almost.is_hermitian(1e-9));
    EXPECT_FALSE(almost.is_hermitian(1e-12));
}

TEST(matrix, hermitian_eigen_examples) {
    const auto diag = hermitian_eigen(ComplexMatrix::diagonal({3, 1, 2}));
    ASSERT_EQ(diag.eigenvalues.size(), 3u);
    EXPECT_NEAR(diag.eigenvalues[0], 1, 1e-14);
    EXPECT_NEAR(diag.eigenvalues[1], 2, 1e-14);
    EXPECT_NEAR(diag.eigenvalues[2], 3, 1e-14);

    const auto sx = hermitian_eigen(pauli::x());
    EXPECT_NEAR(sx.eigenvalues[0], -1, 1e-14);
    EXPECT_NEAR(sx.eigenvalues[1], 1, 1e-14);

    // Projector onto (|00> + |11>)/sqrt(2).
    ComplexMatrix bell(4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    const auto pb = hermitian_eigen(bell);
    EXPECT_NEAR(pb.eigenvalues[0], 0, 1e-14);
    EXPECT_NEAR(pb.eigenvalues[1], 0, 1e-14);
    EXPECT_NEAR(pb.eigenvalues[2], 0, 1e-14);
    EXPECT_NEAR(pb.eigenvalues[3], 1, 1e-14);
    EXPECT_LT(frobenius_norm(pb.reconstruct() - bell), 1e-10);
}

TEST(matrix, hermitian_eigen_rejects_non_hermitian) {
    EXPECT_THROW(hermitian_eigen(ComplexMatrix{{0, 1}, {0, 0}}), std::invalid_argument);
}

TEST(matrix, hermitian_eigen_properties) {
    std::mt19937_64 rng(20261018);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        const ComplexMatrix m = random_hermitian(rng, n);
        const HermitianEigenSystem eig = hermitian_eigen(m);

        ASSERT_TRUE(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
        EXPECT_LT(frobenius_norm(eig.reconstruct() - m), 1e-10);

        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                Complex dot{};
                for (std::size_t k = 0; k < n; ++k) dot += std::conj(eig.eigenvectors[a][k]) * eig.eigenvectors[b][k];
                EXPECT_LT(std::abs(dot - (a == b ? 1.0 : 0.0)), 1e-10);
            }
        }

        double sum = 0, sum_sq = 0;
        for (double x : eig.eigenvalues) sum += x, sum_sq += x * x;
        EXPECT_NEAR(sum, mat_trace(m).real(), 1e-9);
        EXPECT_NEAR(sum_sq, mat_trace(mat_mul(m, m)).real(), 1e-9);

        // Decomposing the reconstruction changes nothing.
        const HermitianEigenSystem again = hermitian_eigen(eig.reconstruct());
        for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(again.eigenvalues[k], eig.eigenvalues[k], 1e-9);
    }
}

TEST(matrix, hermitian_eigen_degenerate_and_16) {
    std::mt19937_64 rng(7);
    const ComplexMatrix m = random_hermitian(rng, 16);
    const auto eig = hermitian_eigen(m);
    EXPECT_LT(frobenius_norm(eig.reconstruct() - m), 1e-10);

    const auto id = hermitian_eigen(ComplexMatrix::identity(5) * 2.0);
    for (double x : id.eigenvalues) EXPECT_NEAR(x, 2, 1e-15);
}

TEST(matrix, matrix_power_int) {
    EXPECT_EQ(matrix_power_int(pauli::y(), 1), pauli::y());
    EXPECT_EQ(matrix_power_int(pauli::z(), 2), ComplexMatrix::identity(2));
    const ComplexMatrix cube = matrix_power_int(ComplexMatrix::diagonal({1.2, -0.2}), 3);
    EXPECT_NEAR(cube(0, 0).real(), 1.728, 1e-15);
    EXPECT_NEAR(cube(1, 1).real(), -0.008, 1e-15);
    EXPECT_THROW(matrix_power_int(pauli::x(), 0), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (unsigned n : {2u, 3u, 5u, 10u}) {
        const ComplexMatrix m = random_hermitian(rng, 4) * 0.5;
        const ComplexMatrix via_eigen =
            hermitian_eigen(m).apply_function([n](double x) { return Complex{std::pow(x, static_cast<double>(n))}; });
        EXPECT_LT(max_abs_diff(matrix_power_int(m, n), via_eigen), 1e-9) << "n=" << n;
    }
}
