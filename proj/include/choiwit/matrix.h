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

#ifndef CHOIWIT_MATRIX_H
#define CHOIWIT_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace choiwit {

using Complex = std::complex<double>;

/// Default tolerance for Hermiticity and unit-trace checks.
inline constexpr double kHermitianTol = 1e-9;

/// Dense square complex matrix, row-major storage.
///
/// This is the carrier for density matrices, observables, Choi matrices and
/// superoperators. Dimensions in this project never exceed 16, so every
/// operation is the naive O(n^3) (or O(n^4) for kron) loop.
class ComplexMatrix {
   public:
    /// Zero matrix. Throws std::invalid_argument if dim == 0.
    explicit ComplexMatrix(std::size_t dim);
    /// Takes ownership of row-major entries; entries.size() must equal dim*dim.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
    /// Nested row literal, e.g. {{0, 1}, {1, 0}}. Rows must form a square.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);

    std::size_t dim() const noexcept {
        return dim_;
    }

    Complex &operator()(std::size_t row, std::size_t col) noexcept {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const noexcept {
        return entries_[row * dim_ + col];
    }

    std::span<const Complex> entries() const noexcept {
        return entries_;
    }
    std::span<Complex> entries() noexcept {
        return entries_;
    }

    /// max |M[i][j] - conj(M[j][i])| <= tol.
    bool is_hermitian(double tol = kHermitianTol) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scalar);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
/// Same as mat_mul.
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// Standard matrix product. Throws std::invalid_argument on dimension mismatch.
ComplexMatrix mat_mul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product; entry (i*b.dim()+k, j*b.dim()+l) is a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

Complex mat_trace(const ComplexMatrix &a);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix &a);

/// (a + a^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix &a);

/// a^n by repeated squaring. Throws std::invalid_argument for n == 0.
ComplexMatrix matrix_power_int(const ComplexMatrix &a, unsigned n);

/// Largest entrywise modulus of a - b. Dimensions must match.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

double frobenius_norm(const ComplexMatrix &a);

/// Eigenvalues ascending; eigenvectors[m] is the unit eigenvector of
/// eigenvalues[m]. The vectors are mutually orthonormal.
struct HermitianEigenSystem {
    std::vector<double> eigenvalues;
    std::vector<std::vector<Complex>> eigenvectors;

    /// sum_m f(lambda_m) |v_m><v_m|.
    template <typename F>
    ComplexMatrix apply_function(F &&f) const {
        const std::size_t n = eigenvalues.size();
        ComplexMatrix out(n);
        for (std::size_t m = 0; m < n; ++m) {
            const Complex w = f(eigenvalues[m]);
            const auto &v = eigenvectors[m];
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    out(i, j) += w * v[i] * std::conj(v[j]);
                }
            }
        }
        return out;
    }

    /// sum_m lambda_m |v_m><v_m|.
    ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi eigensolver. Sweeps until the off-diagonal Frobenius
/// mass drops below 1e-13 (relative to max(1, ||a||_F)) or 100 sweeps pass.
///
/// The input must be Hermitian within `tol`; the strictly upper triangle is
/// mirrored before iterating so tiny asymmetries do not leak into the result.
/// Throws std::invalid_argument for non-Hermitian input.
HermitianEigenSystem hermitian_eigen(const ComplexMatrix &a, double tol = kHermitianTol);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace choiwit

#endif
