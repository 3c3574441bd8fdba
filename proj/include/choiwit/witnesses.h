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

#ifndef CHOIWIT_WITNESSES_H
#define CHOIWIT_WITNESSES_H

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "choiwit/dephasing.h"
#include "choiwit/matrix.h"

namespace choiwit {

/// Eigenvalues at or above -kPsdThreshold count as nonnegative.
inline constexpr double kPsdThreshold = 1e-10;

/// Linear entropy (D/(D-1)) (1 - Tr m^2), D = m.dim().
///
/// `m` must be Hermitian with unit trace within `tol`. Positivity is not
/// required: a unit-trace Hermitian matrix with a negative eigenvalue can
/// give a negative value, which a CP map's Choi matrix never does.
double linear_entropy(const ComplexMatrix &m, double tol = kHermitianTol);

/// Renyi entropy log2(Tr m^alpha) / (1 - alpha), computed from eigenvalues.
///
/// For PSD `m` (eigenvalues >= -tol) any alpha in (0,1) u (1,inf) is accepted
/// and tiny negative eigenvalues are clamped to zero. For indefinite `m` only
/// integer alpha >= 2 is defined. Throws std::invalid_argument for alpha == 1,
/// alpha <= 0, a fractional order on an indefinite matrix, or Tr m^alpha <= 0.
double renyi_entropy(const ComplexMatrix &m, double alpha, double tol = kHermitianTol);

/// Same as renyi_entropy, but on an already computed spectrum.
double renyi_entropy_from_spectrum(std::span<const double> eigenvalues, double alpha, double tol = kHermitianTol);

/// Hermitian observable.
class Observable {
   public:
    /// Throws std::invalid_argument unless `matrix` is Hermitian within tol.
    explicit Observable(ComplexMatrix matrix, double tol = kHermitianTol);

    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    std::size_t dim() const noexcept {
        return matrix_.dim();
    }

   private:
    ComplexMatrix matrix_;
};

/// Q = dA^2 + dB^2 - sqrt(|<[A,B]>|^2 + |<{A - <A>, B - <B>}>|^2), where
/// <O> = Tr(rho O) and dO^2 = <O^2> - <O>^2.
///
/// Nonnegative on every density matrix. `rho` need only be Hermitian with unit
/// trace; on indefinite rho variances can be negative and Q can drop below zero.
double sur_q(const Observable &a, const Observable &b, const ComplexMatrix &rho, double tol = kHermitianTol);

/// dA^2 dB^2 - |<[A,B]>|^2/4 - |<{A - <A>, B - <B>}>|^2/4.
double sur_product_gap(const Observable &a, const Observable &b, const ComplexMatrix &rho,
                       double tol = kHermitianTol);

/// Accumulated non-Markovianity measure over [0, t0].
struct Measure {
    double value = 0;
    /// Total length of integration subintervals dropped because an endpoint
    /// lies inside a pole exclusion zone.
    double excluded_span = 0;
};

struct MeasureOptions {
    double grid_step = 1e-3;
    double pole_exclusion = kDefaultPoleExclusion;
};

/// N_S(t0) = integral over [0, t0] of max(0, -S_l(C(t))), trapezoidal rule on
/// the grid k * grid_step (plus t0 itself when it is off-grid).
Measure measure_ns(const DephasingParams &p, double t0, const MeasureOptions &opts = {});

/// N_e(t0) = integral over [0, t0] of max(0, -2 gamma(t)), same grid.
Measure measure_ne(const DephasingParams &p, double t0, const MeasureOptions &opts = {});

struct MeasurePoint {
    double t0;
    Measure ns;
    Measure ne;
};

/// Both measures at every t0 in `t0_grid` (ascending), from a single pass.
/// Each entry equals the corresponding single-point measure_ns/measure_ne.
std::vector<MeasurePoint> measure_series(const DephasingParams &p, std::span<const double> t0_grid,
                                         const MeasureOptions &opts = {});

enum class ScanMode { closed_form, numerical, both };

struct ScanOptions {
    std::vector<int> renyi_orders{2, 5, 10};
    ScanMode mode = ScanMode::closed_form;
    double pole_exclusion = kDefaultPoleExclusion;
    int rk4_steps = kDefaultRk4Steps;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Witness values at one time point.
///
/// In `numerical` mode the Choi-derived fields come from the RK4 intermediate
/// map; otherwise from the closed form. In `both` mode the numerical linear
/// entropy and the largest entrywise Choi discrepancy are also recorded.
struct WitnessSample {
    double t = 0;
    std::optional<double> gamma;
    double linear_entropy = 0;
    std::map<int, double> renyi;  // NaN where Tr(C^alpha) <= 0
    std::optional<double> q;
    std::vector<double> choi_eigenvalues;  // ascending
    std::optional<double> numerical_linear_entropy;
    std::optional<double> choi_discrepancy;

    double min_eigenvalue() const {
        return choi_eigenvalues.front();
    }
};

struct ScanResult {
    std::vector<WitnessSample> samples;  // same order as the input grid
    std::vector<double> skipped;         // grid points inside a pole exclusion zone
    double max_discrepancy = 0;          // `both` mode only
};

/// Evaluates every witness on the dephasing Choi matrix along `t_grid`.
/// Grid points within `pole_exclusion` of a pole (or, in numerical modes,
/// whose interval [t, t + eps] comes that close) are skipped and listed.
ScanResult witness_scan(const DephasingParams &p, std::span<const double> t_grid, const ScanOptions &opts = {});

/// Uniform grid step, 2*step, ..., up to and including t_max.
/// When 1/step is an integer n the points are k/n, so decimal grids land on
/// the nearest doubles (480/100 == 4.8).
std::vector<double> uniform_grid(double t_max, double step, bool include_zero = false);

}  // namespace choiwit

#endif
