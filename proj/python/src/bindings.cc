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

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "choiwit/choi.h"
#include "choiwit/dephasing.h"
#include "choiwit/matrix.h"
#include "choiwit/witnesses.h"

namespace py = pybind11;
using namespace choiwit;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const ComplexArray &a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
        throw std::invalid_argument("expected a square 2-D array");
    }
    const auto n = static_cast<std::size_t>(a.shape(0));
    std::vector<Complex> entries(a.data(), a.data() + n * n);
    return ComplexMatrix(n, std::move(entries));
}

ComplexArray to_array(const ComplexMatrix &m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    ComplexArray out({n, n});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

LindbladGenerator make_generator(std::size_t dim, const std::vector<std::pair<std::function<double(double)>, ComplexArray>> &jumps,
                                 const std::optional<std::function<ComplexArray(double)>> &hamiltonian) {
    LindbladGenerator g;
    g.dim = dim;
    for (const auto &[rate, op] : jumps) {
        g.jumps.push_back({rate, to_matrix(op)});
    }
    if (hamiltonian) {
        auto h = *hamiltonian;
        g.hamiltonian = [h](double t) {
            py::gil_scoped_acquire gil;
            return to_matrix(h(t));
        };
    }
    g.validate();
    return g;
}

ScanMode mode_from_string(const std::string &s) {
    if (s == "closed_form") return ScanMode::closed_form;
    if (s == "numerical") return ScanMode::numerical;
    if (s == "both") return ScanMode::both;
    throw std::invalid_argument("mode must be 'closed_form', 'numerical' or 'both'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = R"pbdoc(
        choiwit core bindings
        ---------------------

        Choi matrices of intermediate maps, linear/Renyi entropy and
        uncertainty-relation witnesses, and the closed-form dephasing channel.
        Matrices are passed as square complex numpy arrays.
    )pbdoc";

    py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);

    // matrix-core
    m.def("kron", [](const ComplexArray &a, const ComplexArray &b) { return to_array(kron(to_matrix(a), to_matrix(b))); });
    m.def("hermitian_eigen", [](const ComplexArray &a, double tol) {
        const HermitianEigenSystem eig = hermitian_eigen(to_matrix(a), tol);
        const auto n = static_cast<py::ssize_t>(eig.eigenvalues.size());
        ComplexArray vecs({n, n});
        auto v = vecs.mutable_unchecked<2>();
        for (py::ssize_t col = 0; col < n; ++col) {
            for (py::ssize_t row = 0; row < n; ++row) {
                v(row, col) = eig.eigenvectors[col][row];
            }
        }
        return py::make_tuple(py::array_t<double>(n, eig.eigenvalues.data()), vecs);
    }, py::arg("a"), py::arg("tol") = kHermitianTol,
          "Eigenvalues (ascending) and eigenvectors (as columns) of a Hermitian matrix.");
    m.def("matrix_power_int", [](const ComplexArray &a, unsigned n) { return to_array(matrix_power_int(to_matrix(a), n)); });

    // choi-engine
    m.def("max_entangled_state", [](std::size_t d) { return to_array(max_entangled_state(d)); });
    m.def("choi_from_superop", [](const ComplexArray &s, std::size_t d) {
        return to_array(choi_from_superop(Superoperator(d, to_matrix(s))).matrix);
    }, py::arg("superop"), py::arg("system_dim"));
    m.def("random_cptp", [](std::size_t d, std::size_t kraus_count, std::uint64_t seed) {
        return to_array(random_cptp(d, kraus_count, seed).matrix());
    }, py::arg("d"), py::arg("kraus_count"), py::arg("seed"),
          "Superoperator (column-stacking convention) of a seeded random CPTP map.");
    m.def("random_kraus_set", [](std::size_t d, std::size_t kraus_count, std::uint64_t seed) {
        std::vector<ComplexArray> out;
        for (const auto &k : random_kraus_set(d, kraus_count, seed)) {
            out.push_back(to_array(k));
        }
        return out;
    }, py::arg("d"), py::arg("kraus_count"), py::arg("seed"));
    m.def("lindblad_action", [](std::size_t dim, const std::vector<std::pair<std::function<double(double)>, ComplexArray>> &jumps,
                                double t, const ComplexArray &rho,
                                const std::optional<std::function<ComplexArray(double)>> &hamiltonian) {
        return to_array(lindblad_action(make_generator(dim, jumps, hamiltonian), t, to_matrix(rho)));
    }, py::arg("dim"), py::arg("jumps"), py::arg("t"), py::arg("rho"), py::arg("hamiltonian") = py::none(),
          "d rho/dt for a generator given as [(rate(t), L), ...] and optional H(t).");
    m.def("intermediate_map", [](std::size_t dim, const std::vector<std::pair<std::function<double(double)>, ComplexArray>> &jumps,
                                 double t, double eps, int steps,
                                 const std::optional<std::function<ComplexArray(double)>> &hamiltonian) {
        return to_array(intermediate_map(make_generator(dim, jumps, hamiltonian), t, eps, steps).matrix());
    }, py::arg("dim"), py::arg("jumps"), py::arg("t"), py::arg("eps"), py::arg("steps") = kDefaultRk4Steps,
          py::arg("hamiltonian") = py::none());

    // channel-dephasing
    py::enum_<Regime>(m, "Regime")
        .value("overdamped", Regime::overdamped)
        .value("oscillatory", Regime::oscillatory);

    py::class_<DephasingParams>(m, "DephasingParams")
        .def(py::init(&DephasingParams::make), py::arg("gamma0") = 1.0, py::arg("lambda_") = 1.0,
             py::arg("epsilon") = 1e-4)
        .def_readonly("gamma0", &DephasingParams::gamma0)
        .def_readonly("lambda_", &DephasingParams::lambda)
        .def_readonly("epsilon", &DephasingParams::epsilon)
        .def_property_readonly("regime", [](const DephasingParams &p) { return regime(p); })
        .def("__repr__", [](const DephasingParams &p) {
            return "DephasingParams(gamma0=" + std::to_string(p.gamma0) + ", lambda_=" + std::to_string(p.lambda) +
                   ", epsilon=" + std::to_string(p.epsilon) + ")";
        });

    m.def("gamma_t", &gamma_t, py::arg("params"), py::arg("t"));
    m.def("chi_t", &chi_t, py::arg("params"), py::arg("t"));
    m.def("gamma_antiderivative", &gamma_antiderivative, py::arg("params"), py::arg("t"));
    m.def("pole_locations", &pole_locations, py::arg("params"), py::arg("t_max"));
    m.def("choi_closed_form", [](const DephasingParams &p, double t) { return to_array(choi_closed_form(p, t).matrix); },
          py::arg("params"), py::arg("t"));
    m.def("linear_entropy_closed_form", &linear_entropy_closed_form, py::arg("params"), py::arg("t"));
    m.def("q_closed_form", &q_closed_form, py::arg("params"), py::arg("t"));
    m.def("dephasing_intermediate_map", [](const DephasingParams &p, double t, int steps) {
        return to_array(intermediate_map(dephasing_generator(p), t, p.epsilon, steps).matrix());
    }, py::arg("params"), py::arg("t"), py::arg("steps") = kDefaultRk4Steps);

    // witnesses
    m.def("linear_entropy", [](const ComplexArray &a, double tol) { return linear_entropy(to_matrix(a), tol); },
          py::arg("m"), py::arg("tol") = kHermitianTol);
    m.def("renyi_entropy", [](const ComplexArray &a, double alpha, double tol) {
        return renyi_entropy(to_matrix(a), alpha, tol);
    }, py::arg("m"), py::arg("alpha"), py::arg("tol") = kHermitianTol);
    m.def("sur_q", [](const ComplexArray &a, const ComplexArray &b, const ComplexArray &rho) {
        return sur_q(Observable(to_matrix(a)), Observable(to_matrix(b)), to_matrix(rho));
    }, py::arg("a"), py::arg("b"), py::arg("rho"));
    m.def("sur_product_gap", [](const ComplexArray &a, const ComplexArray &b, const ComplexArray &rho) {
        return sur_product_gap(Observable(to_matrix(a)), Observable(to_matrix(b)), to_matrix(rho));
    }, py::arg("a"), py::arg("b"), py::arg("rho"));

    m.def("measure_ns", [](const DephasingParams &p, double t0, double grid_step, double pole_exclusion) {
        return measure_ns(p, t0, {grid_step, pole_exclusion}).value;
    }, py::arg("params"), py::arg("t0"), py::arg("grid_step") = 1e-3, py::arg("pole_exclusion") = kDefaultPoleExclusion);
    m.def("measure_ne", [](const DephasingParams &p, double t0, double grid_step, double pole_exclusion) {
        return measure_ne(p, t0, {grid_step, pole_exclusion}).value;
    }, py::arg("params"), py::arg("t0"), py::arg("grid_step") = 1e-3, py::arg("pole_exclusion") = kDefaultPoleExclusion);

    py::class_<WitnessSample>(m, "WitnessSample")
        .def_readonly("t", &WitnessSample::t)
        .def_readonly("gamma", &WitnessSample::gamma)
        .def_readonly("linear_entropy", &WitnessSample::linear_entropy)
        .def_readonly("renyi", &WitnessSample::renyi)
        .def_readonly("q", &WitnessSample::q)
        .def_readonly("choi_eigenvalues", &WitnessSample::choi_eigenvalues)
        .def_readonly("numerical_linear_entropy", &WitnessSample::numerical_linear_entropy)
        .def_readonly("choi_discrepancy", &WitnessSample::choi_discrepancy);

    m.def("witness_scan", [](const DephasingParams &p, const std::vector<double> &t_grid, const std::vector<int> &orders,
                             const std::string &mode, double pole_exclusion) {
        ScanOptions opts;
        opts.renyi_orders = orders;
        opts.mode = mode_from_string(mode);
        opts.pole_exclusion = pole_exclusion;
        ScanResult r;
        {
            py::gil_scoped_release release;
            r = witness_scan(p, t_grid, opts);
        }
        return py::make_tuple(r.samples, r.skipped);
    }, py::arg("params"), py::arg("t_grid"), py::arg("orders") = std::vector<int>{2, 5, 10},
          py::arg("mode") = "closed_form", py::arg("pole_exclusion") = kDefaultPoleExclusion,
          "Returns (samples, skipped_times).");
}
