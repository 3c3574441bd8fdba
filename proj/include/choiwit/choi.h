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

#ifndef CHOIWIT_CHOI_H
#define CHOIWIT_CHOI_H

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "choiwit/matrix.h"

namespace choiwit {

/// Linear map on d x d operators, stored as a d^2 x d^2 matrix acting on
/// column-stacked operators: vec(A X B) = (B^T kron A) vec(X), with
/// vec(X)[i + j*d] = X(i, j).
class Superoperator {
   public:
    /// Throws std::invalid_argument unless matrix.dim() == system_dim^2.
    Superoperator(std::size_t system_dim, ComplexMatrix matrix);

    static Superoperator identity(std::size_t system_dim);
    /// rho -> sum_k K_k rho K_k^dagger.
    static Superoperator from_kraus(std::span<const ComplexMatrix> kraus);

    std::size_t system_dim() const noexcept {
        return system_dim_;
    }
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }

    ComplexMatrix apply(const ComplexMatrix &rho) const;

    /// max_{i,j} |Tr(Lambda(E_ij)) - delta_ij|.
    double trace_preservation_error() const;

   private:
    std::size_t system_dim_;
    ComplexMatrix matrix_;
};

/// Map composition: (after o before)(X) = after(before(X)).
Superoperator compose(const Superoperator &after, const Superoperator &before);

std::vector<Complex> vectorize(const ComplexMatrix &m);
ComplexMatrix unvectorize(std::span<const Complex> v, std::size_t dim);

/// E_ij = |i><j|.
ComplexMatrix matrix_unit(std::size_t dim, std::size_t i, std::size_t j);

/// d/dt rho = -i[H(t), rho] + sum_k rate_k(t) (L_k rho L_k^dagger - {L_k^dagger L_k, rho}/2).
///
/// Rates are unrestricted in sign; a negative rate is exactly the situation
/// the witnesses in this library are built to detect.
struct LindbladGenerator {
    struct Jump {
        std::function<double(double)> rate;
        ComplexMatrix op;
    };

    std::size_t dim;
    std::function<ComplexMatrix(double)> hamiltonian;  // empty means H = 0
    std::vector<Jump> jumps;

    /// Checks operator dimensions and that H(t) is Hermitian at the given times.
    void validate(std::span<const double> sample_times = {}) const;
};

/// Right-hand side of the master equation at time t.
ComplexMatrix lindblad_action(const LindbladGenerator &g, double t, const ComplexMatrix &rho);

/// Default number of RK4 substeps across [t, t + eps].
inline constexpr int kDefaultRk4Steps = 16;

/// Lambda(t, t + eps), obtained by integrating every matrix unit E_ij with
/// fixed-step classic RK4 and stacking the results as columns.
///
/// The caller is responsible for keeping [t, t + eps] clear of rate
/// singularities. Throws std::invalid_argument for eps <= 0 or steps == 0.
Superoperator intermediate_map(const LindbladGenerator &g, double t, double eps, int steps = kDefaultRk4Steps);

/// Operator on C^d kron C^d. Hermitian with unit trace; positivity is not
/// assumed (its failure is the signal).
struct ChoiMatrix {
    std::size_t system_dim;
    ComplexMatrix matrix;
};

/// |psi><psi| with |psi> = d^{-1/2} sum_i |i>|i>. Requires d >= 2.
ComplexMatrix max_entangled_state(std::size_t d);

/// (id kron Lambda)(|psi><psi|): block (i, j) is Lambda(E_ij) / d.
ChoiMatrix choi_from_superop(const Superoperator &s);

/// Random CPTP map with `kraus_count` Kraus operators.
///
/// Entries are i.i.d. standard complex normals drawn from std::mt19937_64
/// seeded with `seed`; the set is normalized by S^{-1/2} with
/// S = sum_k K_k^dagger K_k (via eigendecomposition). Draws with an S
/// eigenvalue below 1e-12 are discarded and redrawn from the same stream.
/// Requires 1 <= kraus_count <= d^2.
Superoperator random_cptp(std::size_t d, std::size_t kraus_count, std::uint64_t seed);

/// The normalized Kraus set behind random_cptp(d, kraus_count, seed).
std::vector<ComplexMatrix> random_kraus_set(std::size_t d, std::size_t kraus_count, std::uint64_t seed);

}  // namespace choiwit

#endif
