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

#ifndef CHOIWIT_DEPHASING_H
#define CHOIWIT_DEPHASING_H

#include <stdexcept>
#include <vector>

#include "choiwit/choi.h"

namespace choiwit {

/// Pure dephasing of a qubit, d rho/dt = gamma(t) (sigma_z rho sigma_z - rho),
/// with the reservoir-induced rate
///
///     gamma(t) = 2 lambda gamma0 sinh(t g / 2) / (g cosh(t g / 2) + lambda sinh(t g / 2)),
///     g = sqrt(lambda^2 - 2 gamma0 lambda).
///
/// When lambda < 2 gamma0 the root g is imaginary; the rate is then evaluated in
/// the equivalent trigonometric form with Omega = sqrt(2 gamma0 lambda - lambda^2),
/// and its denominator has real zeros (poles of gamma).
struct DephasingParams {
    double gamma0;
    double lambda;
    double epsilon;

    /// Throws std::invalid_argument unless all three values are finite and positive.
    static DephasingParams make(double gamma0, double lambda, double epsilon);
    void validate() const;
};

enum class Regime {
    overdamped,   // lambda >= 2 gamma0: g real, gamma(t) >= 0
    oscillatory,  // lambda <  2 gamma0: g imaginary, gamma(t) changes sign
};

Regime regime(const DephasingParams &p);

/// Thrown when a closed-form quantity is requested too close to a pole of gamma(t).
class PoleError : public std::domain_error {
   public:
    PoleError(double t, double pole);
    double time() const noexcept {
        return time_;
    }
    double pole() const noexcept {
        return pole_;
    }

   private:
    double time_;
    double pole_;
};

/// Points closer than this to a pole are rejected by the closed-form functions.
inline constexpr double kPoleGuard = 1e-9;

/// Default radius excluded around each pole in scans and integrals.
inline constexpr double kDefaultPoleExclusion = 0.05;

double gamma_t(const DephasingParams &p, double t);

/// Poles of gamma in (0, t_max], ascending. Empty in the overdamped regime.
std::vector<double> pole_locations(const DephasingParams &p, double t_max);

/// Distance from t to the nearest pole (infinity when there are none).
double distance_to_nearest_pole(const DephasingParams &p, double t);

/// chi = -4 gamma0 eps lambda / (lambda + g coth(t g / 2)), which is
/// identically -2 gamma(t) eps.
double chi_t(const DephasingParams &p, double t);

/// Antiderivative of gamma: Gamma(t) = lambda t - 2 ln|cosh(tg/2) + lambda sinh(tg/2)/g|
/// (trigonometric analogue when g is imaginary), Gamma(0) = 0. Only meaningful
/// for differences across pole-free intervals.
double gamma_antiderivative(const DephasingParams &p, double t);

/// 4x4 Choi matrix of the first-order intermediate map: 1/2 on (0,0) and (3,3),
/// e^chi / 2 on (0,3) and (3,0), zero elsewhere.
ChoiMatrix choi_closed_form(const DephasingParams &p, double t);

/// (2/3)(1 - e^{2 chi}); the exponent uses coth, consistent with choi_closed_form.
double linear_entropy_closed_form(const DephasingParams &p, double t);

/// Sum-form uncertainty quantity of the closed-form Choi state: 5/4 - e^{2 chi}.
double q_closed_form(const DephasingParams &p, double t);

/// Lindblad generator with H = 0 and a single sigma_z jump at rate gamma(t).
LindbladGenerator dephasing_generator(const DephasingParams &p);

}  // namespace choiwit

#endif
