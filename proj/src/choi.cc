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

#include "choiwit/choi.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace choiwit {

namespace {

constexpr double kMinNormalizerEigenvalue = 1e-12;
constexpr double kGeneratorHermitianTol = 1e-9;

}  // namespace

Superoperator::Superoperator(std::size_t system_dim, ComplexMatrix matrix)
    : system_dim_(system_dim), matrix_(std::move(matrix)) {
    if (system_dim == 0 || matrix_.dim() != system_dim * system_dim) {
        throw std::invalid_argument(
            "Superoperator: matrix dimension " + std::to_string(matrix_.dim()) + " does not match system dimension " +
            std::to_string(system_dim) + " squared");
    }
}

Superoperator Superoperator::identity(std::size_t system_dim) {
    return Superoperator(system_dim, ComplexMatrix::identity(system_dim * system_dim));
}

Superoperator Superoperator::from_kraus(std::span<const ComplexMatrix> kraus) {
    if (kraus.empty()) {
        throw std::invalid_argument("Superoperator::from_kraus: empty Kraus set");
    }
    const std::size_t d = kraus.front().dim();
    ComplexMatrix total(d * d);
    for (const auto &k : kraus) {
        if (k.dim() != d) {
            throw std::invalid_argument("Superoperator::from_kraus: Kraus operators differ in dimension");
        }
        ComplexMatrix conj_k = k;
        for (auto &e : conj_k.entries()) {
            e = std::conj(e);
        }
        total += kron(conj_k, k);
    }
    return Superoperator(d, std::move(total));
}

ComplexMatrix Superoperator::apply(const ComplexMatrix &rho) const {
    if (rho.dim() != system_dim_) {
        throw std::invalid_argument("Superoperator::apply: dimension mismatch");
    }
    const std::vector<Complex> in = vectorize(rho);
    const std::size_t n = in.size();
    std::vector<Complex> out(n);
    for (std::size_t r = 0; r < n; ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < n; ++c) {
            acc += matrix_(r, c) * in[c];
        }
        out[r] = acc;
    }
    return unvectorize(out, system_dim_);
}

double Superoperator::trace_preservation_error() const {
    const std::size_t d = system_dim_;
    double worst = 0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            // Tr(Lambda(E_ij)) = sum_k S[k + k*d, i + j*d]
            Complex tr{};
            for (std::size_t k = 0; k < d; ++k) {
                tr += matrix_(k + k * d, i + j * d);
            }
            worst = std::max(worst, std::abs(tr - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

Superoperator compose(const Superoperator &after, const Superoperator &before) {
    if (after.system_dim() != before.system_dim()) {
        throw std::invalid_argument("compose: dimension mismatch");
    }
    return Superoperator(after.system_dim(), mat_mul(after.matrix(), before.matrix()));
}

std::vector<Complex> vectorize(const ComplexMatrix &m) {
    const std::size_t d = m.dim();
    std::vector<Complex> v(d * d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            v[i + j * d] = m(i, j);
        }
    }
    return v;
}

ComplexMatrix unvectorize(std::span<const Complex> v, std::size_t dim) {
    if (v.size() != dim * dim) {
        throw std::invalid_argument("unvectorize: length is not dim^2");
    }
    ComplexMatrix m(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, j) = v[i + j * dim];
        }
    }
    return m;
}

ComplexMatrix matrix_unit(std::size_t dim, std::size_t i, std::size_t j) {
    ComplexMatrix e(dim);
    e(i, j) = 1.0;
    return e;
}

void LindbladGenerator::validate(std::span<const double> sample_times) const {
    if (dim == 0) {
        throw std::invalid_argument("LindbladGenerator: dimension must be positive");
    }
    for (const auto &jump : jumps) {
        if (jump.op.dim() != dim) {
            throw std::invalid_argument("LindbladGenerator: jump operator dimension mismatch");
        }
        if (!jump.rate) {
            throw std::invalid_argument("LindbladGenerator: jump without a rate function");
        }
    }
    if (!hamiltonian) {
        return;
    }
    for (double t : sample_times) {
        const ComplexMatrix h = hamiltonian(t);
        if (h.dim() != dim) {
            throw std::invalid_argument("LindbladGenerator: Hamiltonian dimension mismatch");
        }
        if (!h.is_hermitian(kGeneratorHermitianTol)) {
            throw std::invalid_argument("LindbladGenerator: Hamiltonian is not Hermitian at t=" + std::to_string(t));
        }
    }
}

ComplexMatrix lindblad_action(const LindbladGenerator &g, double t, const ComplexMatrix &rho) {
    if (rho.dim() != g.dim) {
        throw std::invalid_argument(
            "lindblad_action: state dimension " + std::to_string(rho.dim()) + " does not match generator dimension " +
            std::to_string(g.dim));
    }
    ComplexMatrix out(g.dim);
    if (g.hamiltonian) {
        const ComplexMatrix h = g.hamiltonian(t);
        out = (mat_mul(h, rho) - mat_mul(rho, h)) * Complex{0, -1};
    }
    for (const auto &jump : g.jumps) {
        const double rate = jump.rate(t);
        if (rate == 0) {
            continue;
        }
        const ComplexMatrix &l = jump.op;
        const ComplexMatrix l_dag = dagger(l);
        const ComplexMatrix ldl = mat_mul(l_dag, l);
        ComplexMatrix term = mat_mul(mat_mul(l, rho), l_dag);
        term -= (mat_mul(ldl, rho) + mat_mul(rho, ldl)) * 0.5;
        out += term * rate;
    }
    return out;
}

Superoperator intermediate_map(const LindbladGenerator &g, double t, double eps, int steps) {
    if (!(eps > 0)) {
        throw std::invalid_argument("intermediate_map: eps must be positive");
    }
    if (steps <= 0) {
        throw std::invalid_argument("intermediate_map: steps must be at least 1");
    }
    const std::size_t d = g.dim;
    const double h = eps / steps;
    ComplexMatrix result(d * d);

    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            ComplexMatrix rho = matrix_unit(d, i, j);
            for (int s = 0; s < steps; ++s) {
                const double ts = t + s * h;
                const ComplexMatrix k1 = lindblad_action(g, ts, rho);
                const ComplexMatrix k2 = lindblad_action(g, ts + h / 2, rho + k1 * (h / 2));
                const ComplexMatrix k3 = lindblad_action(g, ts + h / 2, rho + k2 * (h / 2));
                const ComplexMatrix k4 = lindblad_action(g, ts + h, rho + k3 * h);
                rho += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6);
            }
            const std::vector<Complex> column = vectorize(rho);
            for (std::size_t r = 0; r < d * d; ++r) {
                result(r, i + j * d) = column[r];
            }
        }
    }
    return Superoperator(d, std::move(result));
}

ComplexMatrix max_entangled_state(std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("max_entangled_state: dimension must be at least 2");
    }
    ComplexMatrix out(d * d);
    const double w = 1.0 / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            out(i * d + i, j * d + j) = w;
        }
    }
    return out;
}

ChoiMatrix choi_from_superop(const Superoperator &s) {
    const std::size_t d = s.system_dim();
    const double w = 1.0 / static_cast<double>(d);
    ComplexMatrix out(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            // Column i + j*d of the superoperator is vec(Lambda(E_ij)).
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t l = 0; l < d; ++l) {
                    out(i * d + k, j * d + l) = w * s.matrix()(k + l * d, i + j * d);
                }
            }
        }
    }
    return ChoiMatrix{d, std::move(out)};
}

std::vector<ComplexMatrix> random_kraus_set(std::size_t d, std::size_t kraus_count, std::uint64_t seed) {
    if (d == 0) {
        throw std::invalid_argument("random_cptp: dimension must be positive");
    }
    if (kraus_count < 1 || kraus_count > d * d) {
        throw std::invalid_argument(
            "random_cptp: kraus_count must lie in [1, " + std::to_string(d * d) + "], got " +
            std::to_string(kraus_count));
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    while (true) {
        std::vector<ComplexMatrix> kraus;
        kraus.reserve(kraus_count);
        ComplexMatrix normalizer(d);
        for (std::size_t k = 0; k < kraus_count; ++k) {
            ComplexMatrix op(d);
            for (auto &e : op.entries()) {
                const double re = normal(rng);
                const double im = normal(rng);
                e = Complex{re, im};
            }
            normalizer += mat_mul(dagger(op), op);
            kraus.push_back(std::move(op));
        }
        const HermitianEigenSystem eig = hermitian_eigen(hermitian_part(normalizer));
        if (eig.eigenvalues.front() < kMinNormalizerEigenvalue) {
            continue;
        }
        const ComplexMatrix inv_sqrt = eig.apply_function([](double x) { return Complex{1 / std::sqrt(x)}; });
        for (auto &op : kraus) {
            op = mat_mul(op, inv_sqrt);
        }
        return kraus;
    }
}

Superoperator random_cptp(std::size_t d, std::size_t kraus_count, std::uint64_t seed) {
    const std::vector<ComplexMatrix> kraus = random_kraus_set(d, kraus_count, seed);
    return Superoperator::from_kraus(kraus);
}

}  // namespace choiwit
