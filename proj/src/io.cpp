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
#include "sparsepqc/io.hpp"

#include <sstream>

namespace sparsepqc::io {

namespace {

Amplitude amplitude_from(const json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        throw ValidationError("expected [re, im], got " + j.dump());
    }
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

OneQubitGate gate_from(const json &j) {
    if (!j.is_array() || j.size() != 2 || j.at(0).size() != 2 ||
        j.at(1).size() != 2) {
        throw ValidationError("gate must be a 2x2 array of [re, im]");
    }
    return {amplitude_from(j[0][0]), amplitude_from(j[0][1]),
            amplitude_from(j[1][0]), amplitude_from(j[1][1])};
}

} // namespace

json to_json(Amplitude a) { return json::array({a.real(), a.imag()}); }

json to_json(const OneQubitGate &u) {
    return json::array({json::array({to_json(u.u11()), to_json(u.u12())}),
                        json::array({to_json(u.u21()), to_json(u.u22())})});
}

json to_json(const DenseMatrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const SparseUnitary &s) {
    json rows = json::array();
    for (const auto &row : s.rows()) {
        json entries = json::array();
        for (const auto &e : row.entries()) {
            entries.push_back(
                json::array({e.col, e.value.real(), e.value.imag()}));
        }
        rows.push_back(std::move(entries));
    }
    return {{"dim", s.dim()}, {"rows", std::move(rows)}};
}

json to_json(const LocalHamiltonian &h) {
    json terms = json::array();
    for (const auto &t : h.terms()) {
        json w = json::array();
        for (const auto &a : t.w) {
            w.push_back(to_json(a));
        }
        terms.push_back({{"z", t.z}, {"w", std::move(w)}});
    }
    return {{"dim", h.dim()}, {"terms", std::move(terms)}};
}

json to_json(const PauliStringTerm &t) {
    return {{"coefficient", t.coefficient},
            {"axis", std::string(1, axis_name(t.axis))},
            {"position", t.position},
            {"n", t.n}};
}

json to_json(const HamiltonianGroup &g) {
    json out = {
        {"kind", g.kind == HamiltonianGroup::Kind::String ? "string"
                                                          : "controlled"},
        {"first_op", g.first_op},
        {"op_count", g.op_count},
        {"factors", json::array()}};
    for (const auto &h : g.factors) {
        out["factors"].push_back(to_json(h));
    }
    if (g.pauli) {
        json p = json::array();
        for (const auto &t : *g.pauli) {
            p.push_back(to_json(t));
        }
        out["pauli"] = std::move(p);
    }
    return out;
}

json to_json(const Circuit &c) {
    json ops = json::array();
    for (const auto &op : c.ops) {
        json o;
        if (op.kind == GateOp::Kind::Controlled) {
            o["kind"] = "controlled";
            o["i"] = op.control;
        } else {
            o["kind"] = "single";
        }
        o["j"] = op.target;
        o["u"] = to_json(op.u);
        if (op.rotation) {
            o["rotation"] = {{"axis", std::string(1, axis_name(op.rotation->axis))},
                             {"theta", op.rotation->theta}};
        }
        ops.push_back(std::move(o));
    }
    return {{"n", c.n}, {"ops", std::move(ops)}};
}

SparseUnitary sparse_from_json(const json &j) {
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<TwoSparseRow> rows;
    for (const auto &row : j.at("rows")) {
        TwoSparseRow r;
        for (const auto &e : row) {
            r.insert(e.at(0).get<BasisIndex>(),
                     {e.at(1).get<double>(), e.at(2).get<double>()});
        }
        rows.push_back(r);
    }
    return SparseUnitary(dim, std::move(rows));
}

LocalHamiltonian hamiltonian_from_json(const json &j) {
    const auto dim = j.at("dim").get<std::size_t>();
    LocalHamiltonian h(dim);
    for (const auto &t : j.at("terms")) {
        std::vector<Amplitude> w;
        for (const auto &e : t.at("w")) {
            w.push_back(amplitude_from(e));
        }
        h.add_term(t.at("z").get<double>(), std::move(w));
    }
    return h;
}

Circuit circuit_from_json(const json &j) {
    Circuit c;
    c.n = j.at("n").get<int>();
    for (const auto &o : j.at("ops")) {
        const auto kind = o.at("kind").get<std::string>();
        const int target = o.at("j").get<int>();
        const OneQubitGate u = gate_from(o.at("u"));
        std::optional<RotationLabel> rot;
        if (o.contains("rotation")) {
            rot = RotationLabel{
                parse_axis(o["rotation"].at("axis").get<std::string>()),
                o["rotation"].at("theta").get<double>()};
        }
        if (kind == "controlled") {
            c.ops.push_back(
                GateOp::controlled(o.at("i").get<int>(), target, u, rot));
        } else if (kind == "single") {
            c.ops.push_back(GateOp::single(target, u, rot));
        } else {
            throw ValidationError("unknown op kind '" + kind + "'");
        }
    }
    c.validate();
    return c;
}

json state_to_json(const StateVector &s) {
    json out = json::array();
    for (const auto &a : s.amplitudes()) {
        out.push_back(to_json(a));
    }
    return out;
}

StateVector state_from_json(const json &j) {
    const json &arr = j.is_object() ? j.at("amplitudes") : j;
    if (!arr.is_array() || arr.empty()) {
        throw ValidationError("state must be a non-empty array of [re, im]");
    }
    std::vector<Amplitude> amps;
    amps.reserve(arr.size());
    for (const auto &a : arr) {
        amps.push_back(amplitude_from(a));
    }
    int n = 0;
    while (pow2(n) < amps.size() && n < kMaxQubits) {
        ++n;
    }
    if (pow2(n) != amps.size() || n == 0) {
        throw ValidationError("state length " + std::to_string(amps.size()) +
                              " is not 2^n with n >= 1");
    }
    return StateVector(n, std::move(amps));
}

ParamTable params_from_json(const json &j) {
    if (!j.is_object()) {
        throw ValidationError("parameter file must be a JSON object");
    }
    ParamTable out;
    for (const auto &[name, value] : j.items()) {
        if (value.is_number()) {
            out[name] = value.get<double>();
        } else if (value.is_string()) {
            const auto v = parse_angle_literal(value.get<std::string>());
            if (!v) {
                throw ValidationError("bad value for parameter " + name);
            }
            out[name] = *v;
        } else {
            throw ValidationError("bad value for parameter " + name);
        }
    }
    return out;
}

std::string probabilities_csv(const std::vector<double> &p) {
    std::ostringstream os;
    os << "index,probability\n";
    for (std::size_t k = 0; k < p.size(); ++k) {
        os << k << ',' << format_real(p[k]) << '\n';
    }
    return os.str();
}

std::string amplitudes_csv(const StateVector &s) {
    std::ostringstream os;
    os << "index,re,im\n";
    for (std::size_t k = 0; k < s.size(); ++k) {
        os << k << ',' << format_real(s[k].real()) << ','
           << format_real(s[k].imag()) << '\n';
    }
    return os.str();
}

std::string sweep_csv(const ErrorSweep &sweep) {
    std::ostringstream os;
    os << "theta,error\n";
    for (std::size_t k = 0; k < sweep.thetas.size(); ++k) {
        os << format_real(sweep.thetas[k]) << ','
           << format_real(sweep.errors[k]) << '\n';
    }
    return os.str();
}

json document(const std::string &kind, json payload) {
    json out = {{"schema", kSchema}, {"kind", kind}};
    for (auto &[key, value] : payload.items()) {
        out[key] = value;
    }
    return out;
}

} // namespace sparsepqc::io
