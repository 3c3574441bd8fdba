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

#include "choiwit/dephasing.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace choiwit {

namespace {

// |g| = sqrt(|lambda^2 - 2 gamma0 lambda|); real root in the overdamped regime,
// magnitude of the imaginary root (Omega) in the oscillatory one.
double root_magnitude(const DephasingParams &p) {
    return std::sqrt(std::abs(p.lambda * p.lambda - 2 * p.gamma0 * p.lambda));
}

// sin(x)/x and tanh(x)/x with the removable singularity filled in.
double sinc(double x) {
    return std::abs(x) < 1e-4 ? 1 - x * x / 6 : std::sin(x) / x;
}

double tanhc(double x) {
    return std::abs(x) < 1e-4 ? 1 - x * x / 3 : std::tanh(x) / x;
}

// gamma = 2 lambda gamma0 * ratio, where ratio = s / (c + lambda s) with
// s = sinh(tg/2)/g, c = cosh(tg/2) (or the trigonometric analogues).
double rate_ratio(const DephasingParams &p, double t) {
    const double root = root_magnitude(p);
    const double half = t / 2;
    if (regime(p) == Regime::overdamped) {
        // Divide through by cosh to stay finite for large t.
        const double tau = half * tanhc(half * root);
        return tau / (1 + p.lambda * tau);
    }
    const double s = half * sinc(half * root);
    const double c = std::cos(half * root);
    return s / (c + p.lambda * s);
}

void check_time(const DephasingParams &p, double t, const char *what) {
    if (!(t >= 0) || !std::isfinite(t)) {
        throw std::invalid_argument(std::string(what) + ": time must be finite and nonnegative");
    }
    if (regime(p) == Regime::oscillatory) {
        const double root = root_magnitude(p);
        const double first = 2 * (std::numbers::pi - std::atan(root / p.lambda)) / root;
        const double period = 2 * std::numbers::pi / root;
        const double k = std::round((t - first) / period);
        const double nearest = first + std::max(0.0, k) * period;
        if (std::abs(t - nearest) < kPoleGuard) {
            throw PoleError(t, nearest);
        }
    }
}

std::string pole_message(double t, double pole) {
    std::ostringstream out;
    out.precision(17);
    out << "gamma(t) has a pole at t=" << pole << "; cannot evaluate at t=" << t;
    return out.str();
}

}  // namespace

PoleError::PoleError(double t, double pole) : std::domain_error(pole_message(t, pole)), time_(t), pole_(pole) {
}

DephasingParams DephasingParams::make(double gamma0, double lambda, double epsilon) {
    DephasingParams p{gamma0, lambda, epsilon};
    p.validate();
    return p;
}

void DephasingParams::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0; };
    if (!positive(gamma0) || !positive(lambda) || !positive(epsilon)) {
        throw std::invalid_argument("DephasingParams: gamma0, lambda and epsilon must be finite and positive");
    }
}

Regime regime(const DephasingParams &p) {
    return p.lambda >= 2 * p.gamma0 ? Regime::overdamped : Regime::oscillatory;
}

double gamma_t(const DephasingParams &p, double t) {
    check_time(p, t, "gamma_t");
    return 2 * p.lambda * p.gamma0 * rate_ratio(p, t);
}

std::vector<double> pole_locations(const DephasingParams &p, double t_max) {
    std::vector<double> poles;
    if (regime(p) == Regime::overdamped) {
        return poles;
    }
    // cos(t Omega/2) + (lambda/Omega) sin(t Omega/2) = 0
    //   <=> t Omega/2 = pi - atan(Omega/lambda) + k pi.
    const double root = root_magnitude(p);
    const double base = std::numbers::pi - std::atan(root / p.lambda);
    for (int k = 0;; ++k) {
        const double t = 2 * (base + k * std::numbers::pi) / root;
        if (t > t_max) {
            break;
        }
        poles.push_back(t);
    }
    return poles;
}

double distance_to_nearest_pole(const DephasingParams &p, double t) {
    if (regime(p) == Regime::overdamped) {
        return std::numeric_limits<double>::infinity();
    }
    const double root = root_magnitude(p);
    const double first = 2 * (std::numbers::pi - std::atan(root / p.lambda)) / root;
    const double period = 2 * std::numbers::pi / root;
    const double k = std::max(0.0, std::round((t - first) / period));
    double best = std::abs(t - (first + k * period));
    if (k > 0) {
        best = std::min(best, std::abs(t - (first + (k - 1) * period)));
    }
    return std::min(best, std::abs(t - (first + (k + 1) * period)));
}

double chi_t(const DephasingParams &p, double t) {
    check_time(p, t, "chi_t");
    // lambda + g coth(tg/2) = (lambda s + c) / s with s, c as in rate_ratio.
    return -4 * p.gamma0 * p.epsilon * p.lambda * rate_ratio(p, t);
}

double gamma_antiderivative(const DephasingParams &p, double t) {
    const double root = root_magnitude(p);
    const double half = t / 2;
    if (regime(p) == Regime::overdamped) {
        // ln(c + lambda s) = ln cosh(x) + ln(1 + lambda tanh(x)/g)
        const double x = std::abs(half * root);
        const double log_cosh = x + std::log1p(std::exp(-2 * x)) - std::numbers::ln2;
        const double tau = half * tanhc(half * root);
        return p.lambda * t - 2 * (log_cosh + std::log1p(p.lambda * tau));
    }
    const double s = half * sinc(half * root);
    const double c = std::cos(half * root);
    return p.lambda * t - 2 * std::log(std::abs(c + p.lambda * s));
}

ChoiMatrix choi_closed_form(const DephasingParams &p, double t) {
    const double off = 0.5 * std::exp(chi_t(p, t));
    ComplexMatrix m(4);
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    m(0, 3) = off;
    m(3, 0) = off;
    return ChoiMatrix{2, std::move(m)};
}

double linear_entropy_closed_form(const DephasingParams &p, double t) {
    return -(2.0 / 3.0) * std::expm1(2 * chi_t(p, t));
}

double q_closed_form(const DephasingParams &p, double t) {
    return 1.25 - std::exp(2 * chi_t(p, t));
}

LindbladGenerator dephasing_generator(const DephasingParams &p) {
    p.validate();
    LindbladGenerator g;
    g.dim = 2;
    g.jumps.push_back({[p](double t) { return gamma_t(p, t); }, pauli::z()});
    return g;
}

}  // namespace choiwit
