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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace choiwit {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(
            std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
            std::to_string(b.dim()) + ")");
    }
}

constexpr double kJacobiOffTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_mass(const ComplexMatrix &a) {
    double sum = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) {
        throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    }
    if (entries_.size() != dim * dim) {
        throw std::invalid_argument(
            "ComplexMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
            std::to_string(entries_.size()));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    if (dim_ == 0) {
        throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    }
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("ComplexMatrix: rows must form a square matrix");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out(i, i) = values[i];
    }
    return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator+=");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator-=");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (auto &e : entries_) {
        e *= scalar;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(ComplexMatrix a, Complex scalar) {
    a *= scalar;
    return a;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix a) {
    a *= scalar;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return mat_mul(a, b);
}

ComplexMatrix mat_mul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "mat_mul");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

Complex mat_trace(const ComplexMatrix &a) {
    Complex sum{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix &a) {
    ComplexMatrix out = a + dagger(a);
    out *= 0.5;
    return out;
}

ComplexMatrix matrix_power_int(const ComplexMatrix &a, unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("matrix_power_int: exponent must be at least 1");
    }
    ComplexMatrix result = a;
    ComplexMatrix base = a;
    unsigned remaining = n - 1;
    while (remaining > 0) {
        if (remaining & 1u) {
            result = mat_mul(result, base);
        }
        remaining >>= 1;
        if (remaining > 0) {
            base = mat_mul(base, base);
        }
    }
    return result;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

double frobenius_norm(const ComplexMatrix &a) {
    double sum = 0;
    for (const auto &e : a.entries()) {
        sum += std::norm(e);
    }
    return std::sqrt(sum);
}

ComplexMatrix HermitianEigenSystem::reconstruct() const {
    return apply_function([](double lambda) { return Complex{lambda}; });
}

HermitianEigenSystem hermitian_eigen(const ComplexMatrix &a, double tol) {
    if (!a.is_hermitian(tol)) {
        throw std::invalid_argument("hermitian_eigen: input is not Hermitian within tolerance");
    }
    const std::size_t n = a.dim();
    ComplexMatrix work = hermitian_part(a);
    ComplexMatrix vecs = ComplexMatrix::identity(n);
    const double threshold = kJacobiOffTol * std::max(1.0, frobenius_norm(work));

    for (int sweep = 0; sweep < kJacobiMaxSweeps && off_diagonal_mass(work) >= threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = work(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) {
                    continue;
                }
                // Rotate by U = diag-phase * real Jacobi rotation so that
                // (U^dagger A U)(p, q) == 0.
                const Complex phase = apq / r;  // e^{i phi}
                const double app = work(p, p).real();
                const double aqq = work(q, q).real();
                const double theta = (aqq - app) / (2 * r);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                const Complex upq = s;
                const Complex uqp = -s * std::conj(phase);
                const Complex uqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = work(k, p);
                    const Complex akq = work(k, q);
                    work(k, p) = akp * c + akq * uqp;
                    work(k, q) = akp * upq + akq * uqq;
                    const Complex vkp = vecs(k, p);
                    const Complex vkq = vecs(k, q);
                    vecs(k, p) = vkp * c + vkq * uqp;
                    vecs(k, q) = vkp * upq + vkq * uqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = work(p, k);
                    const Complex aqk = work(q, k);
                    work(p, k) = c * apk + std::conj(uqp) * aqk;
                    work(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                work(p, q) = 0;
                work(q, p) = 0;
                work(p, p) = work(p, p).real();
                work(q, q) = work(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return work(i, i).real() < work(j, j).real();
    });

    HermitianEigenSystem out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t m : order) {
        out.eigenvalues.push_back(work(m, m).real());
        std::vector<Complex> v(n);
        for (std::size_t k = 0; k < n; ++k) {
            v[k] = vecs(k, m);
        }
        out.eigenvectors.push_back(std::move(v));
    }
    return out;
}

namespace pauli {

ComplexMatrix x() {
    return {{0, 1}, {1, 0}};
}

ComplexMatrix y() {
    return {{0, Complex{0, -1}}, {Complex{0, 1}, 0}};
}

ComplexMatrix z() {
    return {{1, 0}, {0, -1}};
}

}  // namespace pauli

}  // namespace choiwit
