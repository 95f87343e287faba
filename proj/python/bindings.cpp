// Copyright 2026 The sparsepqc Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sparsepqc/circuit_ir.hpp"
#include "sparsepqc/cli.hpp"
#include "sparsepqc/core.hpp"
#include "sparsepqc/engine.hpp"
#include "sparsepqc/gate_matrix.hpp"
#include "sparsepqc/hamiltonian.hpp"
#include "sparsepqc/verify.hpp"

namespace py = pybind11;
using namespace sparsepqc;

namespace {

using CArray = py::array_t<Amplitude, py::array::c_style | py::array::forcecast>;

CArray to_numpy(const DenseMatrix &m) {
    const auto d = static_cast<py::ssize_t>(m.dim());
    CArray out({d, d});
    std::copy(m.data().begin(), m.data().end(), out.mutable_data());
    return out;
}

CArray to_numpy(const std::vector<Amplitude> &v) {
    CArray out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.size())});
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

DenseMatrix from_numpy(const CArray &a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
        throw ValidationError("expected a square 2-d array");
    }
    const auto d = static_cast<std::size_t>(a.shape(0));
    return DenseMatrix(d, std::vector<Amplitude>(a.data(), a.data() + d * d));
}

std::vector<Amplitude> vec_from_numpy(const CArray &a) {
    if (a.ndim() != 1) {
        throw ValidationError("expected a 1-d array");
    }
    return {a.data(), a.data() + a.shape(0)};
}

OneQubitGate gate_from_numpy(const CArray &a) {
    if (a.ndim() != 2 || a.shape(0) != 2 || a.shape(1) != 2) {
        throw ValidationError("expected a 2x2 array");
    }
    const Amplitude *p = a.data();
    return {p[0], p[1], p[2], p[3]};
}

py::exception<ParseError> *g_parse_error = nullptr;

int log2_exact(std::size_t size) {
    int n = 0;
    while (pow2(n) < size) {
        ++n;
    }
    if (pow2(n) != size) {
        throw ValidationError("state length is not a power of two");
    }
    return n;
}

} // namespace

PYBIND11_MODULE(_sparsepqc, m) {
    m.doc() = "Sparse controlled-gate unitaries, local Hamiltonians and a "
              "state-vector engine";

    py::register_exception<ValidationError>(m, "ValidationError",
                                            PyExc_ValueError);
    // Leaked on purpose: the translator may run until interpreter exit.
    g_parse_error =
        new py::exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const ParseError &e) {
            const py::handle type = g_parse_error->ptr();
            py::object err = type(e.what());
            err.attr("line") = e.line();
            err.attr("column") = e.column();
            PyErr_SetObject(type.ptr(), err.ptr());
        } catch (const BindError &e) {
            PyErr_SetString(PyExc_KeyError, e.what());
        }
    });

    py::enum_<Axis>(m, "Axis")
        .value("X", Axis::X)
        .value("Y", Axis::Y)
        .value("Z", Axis::Z);

    py::class_<OneQubitGate>(m, "OneQubitGate")
        .def(py::init<>())
        .def(py::init([](const CArray &a) { return gate_from_numpy(a); }),
             py::arg("matrix"))
        .def_static("named", [](const std::string &s) {
            return OneQubitGate::named(s);
        })
        .def_property_readonly("matrix",
                               [](const OneQubitGate &u) {
                                   return to_numpy(u.dense());
                               })
        .def("__eq__", [](const OneQubitGate &a, const OneQubitGate &b) {
            return a == b;
        });

    m.def("rotation_gate", &rotation_gate, py::arg("axis"), py::arg("theta"));
    m.def("eigenpairs_2x2", [](const OneQubitGate &u) {
        py::list out;
        for (const auto &p : eigenpairs_2x2(u)) {
            out.append(py::make_tuple(
                p.lambda, to_numpy(std::vector<Amplitude>(p.vec.begin(),
                                                          p.vec.end()))));
        }
        return out;
    });
    m.def("phase_of", [](Amplitude lambda) { return phase_of(lambda).z; });

    py::class_<SparseUnitary>(m, "SparseUnitary")
        .def_property_readonly("dim", &SparseUnitary::dim)
        .def("to_dense",
             [](const SparseUnitary &s) { return to_numpy(s.to_dense()); })
        .def("rows",
             [](const SparseUnitary &s) {
                 py::list rows;
                 for (const auto &r : s.rows()) {
                     py::list entries;
                     for (const auto &e : r.entries()) {
                         entries.append(py::make_tuple(e.col, e.value));
                     }
                     rows.append(entries);
                 }
                 return rows;
             })
        .def("is_unitary", &SparseUnitary::is_unitary,
             py::arg("tol") = kUnitaryTol);

    m.def("build_cu_sparse",
          [](int n, int i, int j, const OneQubitGate &u) {
              return build_cu_sparse({n, i, j, u});
          },
          py::arg("n"), py::arg("i"), py::arg("j"), py::arg("u"));
    m.def("build_sj_sparse", &build_sj_sparse, py::arg("n"), py::arg("j"),
          py::arg("u"));

    py::class_<LocalHamiltonian>(m, "LocalHamiltonian")
        .def_property_readonly("dim", &LocalHamiltonian::dim)
        .def_property_readonly("terms",
                               [](const LocalHamiltonian &h) {
                                   py::list out;
                                   for (const auto &t : h.terms()) {
                                       out.append(
                                           py::make_tuple(t.z, to_numpy(t.w)));
                                   }
                                   return out;
                               })
        .def("__len__",
             [](const LocalHamiltonian &h) { return h.terms().size(); })
        .def("orthonormality_defect",
             &LocalHamiltonian::orthonormality_defect)
        .def("dense",
             [](const LocalHamiltonian &h) { return to_numpy(realize_dense(h)); })
        .def("exp_minus_iH", [](const LocalHamiltonian &h) {
            return to_numpy(exp_minus_iH(h));
        });

    m.def("hamiltonian_cu",
          [](int n, int i, int j, const OneQubitGate &u) {
              return hamiltonian_cu({n, i, j, u});
          },
          py::arg("n"), py::arg("i"), py::arg("j"), py::arg("u"));
    m.def("hamiltonian_sj",
          [](int n, int j, const OneQubitGate &u) {
              return hamiltonian_sj(n, j, eigenpairs_2x2(u));
          },
          py::arg("n"), py::arg("j"), py::arg("u"));

    m.def("apply_single_qubit",
          [](const CArray &state, int j, const OneQubitGate &u) {
              auto v = vec_from_numpy(state);
              const int n = log2_exact(v.size());
              apply_single_qubit_kernel(v, n, j, u);
              return to_numpy(v);
          },
          py::arg("state"), py::arg("j"), py::arg("u"));
    m.def("apply_controlled",
          [](const CArray &state, int i, int j, const OneQubitGate &u) {
              auto v = vec_from_numpy(state);
              const int n = log2_exact(v.size());
              apply_controlled_kernel(v, n, i, j, u);
              return to_numpy(v);
          },
          py::arg("state"), py::arg("i"), py::arg("j"), py::arg("u"));

    py::class_<Circuit>(m, "Circuit")
        .def_readonly("n", &Circuit::n)
        .def("__len__", [](const Circuit &c) { return c.ops.size(); })
        .def("dense_unitary",
             [](const Circuit &c) { return to_numpy(circuit_dense_unitary(c)); })
        .def("run",
             [](const Circuit &c, std::optional<CArray> state) {
                 const StateVector in =
                     state ? StateVector(c.n, vec_from_numpy(*state))
                           : StateVector(c.n);
                 return to_numpy(run_circuit(c, in).amplitudes());
             },
             py::arg("state") = py::none())
        .def("hamiltonian_groups", [](const Circuit &c) {
            py::list out;
            for (const auto &g : circuit_hamiltonians(c)) {
                out.append(py::make_tuple(
                    g.kind == HamiltonianGroup::Kind::String ? "string"
                                                             : "controlled",
                    g.op_count, to_numpy(g.unitary())));
            }
            return out;
        });

    py::class_<CircuitTemplate>(m, "CircuitTemplate")
        .def_readonly("n", &CircuitTemplate::n)
        .def("__len__", [](const CircuitTemplate &t) { return t.ops.size(); })
        .def("parameters", &CircuitTemplate::parameters)
        .def("serialize", [](const CircuitTemplate &t) { return serialize(t); })
        .def("bind",
             [](const CircuitTemplate &t, const ParamTable &p) {
                 return sparsepqc::bind(t, p);
             },
             py::arg("params") = ParamTable{});

    m.def("parse_circuit",
          [](const std::string &src) { return parse_circuit(src); });
    m.def("hea_template",
          [](int n, int layers, bool paper16) {
              HeaOptions o;
              o.paper16 = paper16;
              return hea_template(n, layers, o);
          },
          py::arg("n"), py::arg("layers") = 1, py::arg("paper16") = false);

    m.def("frobenius_error",
          [](const CArray &a, const CArray &b) {
              return frobenius_error(from_numpy(a), from_numpy(b));
          });
    m.def("exp_oracle",
          [](const CArray &h) { return to_numpy(exp_oracle(from_numpy(h))); });
    m.def("gate_hamiltonian_sweep",
          [](int n, int i, int j, Axis axis, std::size_t points) {
              return gate_hamiltonian_sweep(n, i, j, axis, theta_grid(points))
                  .errors;
          },
          py::arg("n"), py::arg("i"), py::arg("j"), py::arg("axis"),
          py::arg("points") = 100);
    m.def("string_hamiltonian_sweep",
          [](int n, Axis axis, std::size_t points) {
              return string_hamiltonian_sweep(n, axis, theta_grid(points))
                  .errors;
          },
          py::arg("n"), py::arg("axis"), py::arg("points") = 100);

    m.def("run_cli", [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        const int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
