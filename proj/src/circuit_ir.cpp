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
#include "sparsepqc/circuit_ir.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace sparsepqc {

ParseError::ParseError(int line, int column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message) {}

namespace {

std::string join_missing(const std::vector<std::string> &names) {
    std::string out = "unbound parameter";
    out += names.size() == 1 ? ": " : "s: ";
    for (std::size_t k = 0; k < names.size(); ++k) {
        out += (k ? ", $" : "$") + names[k];
    }
    return out;
}

} // namespace

BindError::BindError(std::vector<std::string> missing)
    : std::invalid_argument(join_missing(missing)),
      missing_(std::move(missing)) {}

std::vector<std::string> CircuitTemplate::parameters() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto &op : ops) {
        if (op.axis && op.angle.is_ref() && seen.insert(op.angle.name).second) {
            out.push_back(op.angle.name);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Literals

namespace {

constexpr std::array<std::string_view, 6> kNamedGates = {"x", "y", "z",
                                                         "h", "s", "t"};

bool is_named_gate(std::string_view name) {
    return std::find(kNamedGates.begin(), kNamedGates.end(), name) !=
           kNamedGates.end();
}

std::optional<double> parse_number(std::string_view s) {
    if (s.empty()) {
        return std::nullopt;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    const auto *end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

bool valid_name(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) ||
                       s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::string format_amplitude(Amplitude a) {
    if (a.imag() == 0.0 && !std::signbit(a.imag())) {
        return format_real(a.real());
    }
    return "(" + format_real(a.real()) + "," + format_real(a.imag()) + ")";
}

} // namespace

std::optional<double> parse_angle_literal(std::string_view token) {
    const auto pos = token.find("pi");
    if (pos == std::string_view::npos) {
        return parse_number(token);
    }
    std::string_view head = token.substr(0, pos);
    std::string_view tail = token.substr(pos + 2);
    double value = kPi;
    if (head == "-") {
        value = -value;
    } else if (!head.empty()) {
        if (head.back() != '*') {
            return std::nullopt;
        }
        const auto factor = parse_number(head.substr(0, head.size() - 1));
        if (!factor) {
            return std::nullopt;
        }
        value *= *factor;
    }
    if (!tail.empty()) {
        if (tail.front() != '/') {
            return std::nullopt;
        }
        const auto den = parse_number(tail.substr(1));
        if (!den || *den == 0.0) {
            return std::nullopt;
        }
        value /= *den;
    }
    return value;
}

std::optional<Amplitude> parse_complex_literal(std::string_view s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
        const auto comma = s.find(',');
        if (comma == std::string_view::npos) {
            return std::nullopt;
        }
        const auto re = parse_angle_literal(s.substr(0, comma));
        const auto im = parse_angle_literal(s.substr(comma + 1));
        if (!re || !im) {
            return std::nullopt;
        }
        return Amplitude{*re, *im};
    }
    if (const auto re = parse_angle_literal(s)) {
        return Amplitude{*re, 0.0};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
    std::string_view text;
    int column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[k]))) {
            ++k;
            continue;
        }
        const std::size_t start = k;
        while (k < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[k]))) {
            ++k;
        }
        out.push_back({line.substr(start, k - start),
                       static_cast<int>(start) + 1});
    }
    return out;
}

class LineParser {
  public:
    LineParser(int line, std::vector<Token> tokens, int n)
        : line_(line), tokens_(std::move(tokens)), n_(n) {}

    [[noreturn]] void fail(const Token &t, const std::string &msg) const {
        throw ParseError(line_, t.column, msg);
    }

    void expect_args(std::size_t count) const {
        if (tokens_.size() != count + 1) {
            const Token &at =
                tokens_.size() > count + 1 ? tokens_[count + 1] : tokens_[0];
            fail(at, "'" + std::string(tokens_[0].text) + "' expects " +
                         std::to_string(count) + " argument" +
                         (count == 1 ? "" : "s"));
        }
    }

    int qubit(std::size_t idx) const {
        const Token &t = tokens_[idx];
        if (t.text.size() < 2 || t.text[0] != 'q') {
            fail(t, "expected qubit like q1, got '" + std::string(t.text) +
                        "'");
        }
        int q = 0;
        const auto *end = t.text.data() + t.text.size();
        const auto [ptr, ec] = std::from_chars(t.text.data() + 1, end, q);
        if (ec != std::errc{} || ptr != end) {
            fail(t, "expected qubit like q1, got '" + std::string(t.text) +
                        "'");
        }
        if (q < 1 || q > n_) {
            fail(t, "qubit out of range: " + std::string(t.text));
        }
        return q;
    }

    ParamExpr angle(std::size_t idx) const {
        const Token &t = tokens_[idx];
        if (!t.text.empty() && t.text[0] == '$') {
            const auto name = t.text.substr(1);
            if (!valid_name(name)) {
                fail(t, "bad parameter name '" + std::string(t.text) + "'");
            }
            return ParamExpr::ref(std::string(name));
        }
        const auto v = parse_angle_literal(t.text);
        if (!v) {
            fail(t, "bad angle '" + std::string(t.text) + "'");
        }
        return ParamExpr::literal(*v);
    }

    // Named gate or four entries starting at idx.
    void fixed_gate(std::size_t idx, TemplateOp &op) const {
        const std::size_t left = tokens_.size() - idx;
        if (left == 1) {
            const auto name = tokens_[idx].text;
            if (!is_named_gate(name) && name != "i" && name != "id") {
                fail(tokens_[idx], "unknown gate '" + std::string(name) + "'");
            }
            op.u = OneQubitGate::named(name);
            op.gate_name = std::string(name);
            return;
        }
        if (left != 4) {
            fail(tokens_[0], "'" + std::string(tokens_[0].text) +
                                 "' expects a gate name or 4 entries");
        }
        std::array<Amplitude, 4> e{};
        for (std::size_t k = 0; k < 4; ++k) {
            const auto a = parse_complex_literal(tokens_[idx + k].text);
            if (!a) {
                fail(tokens_[idx + k], "bad matrix entry '" +
                                           std::string(tokens_[idx + k].text) +
                                           "'");
            }
            e[k] = *a;
        }
        try {
            op.u = OneQubitGate(e[0], e[1], e[2], e[3]);
        } catch (const ValidationError &err) {
            fail(tokens_[idx], err.what());
        }
        op.gate_name.clear();
    }

    TemplateOp statement() const {
        const auto kw = tokens_[0].text;
        TemplateOp op;
        if (kw == "rx" || kw == "ry" || kw == "rz") {
            expect_args(2);
            op.target = qubit(1);
            op.axis = parse_axis(kw.substr(1));
            op.angle = angle(2);
            return op;
        }
        if (kw == "u") {
            if (tokens_.size() < 3) {
                expect_args(2);
            }
            op.target = qubit(1);
            fixed_gate(2, op);
            return op;
        }
        if (kw.size() >= 2 && kw[0] == 'c') {
            const auto rest = kw.substr(1);
            const bool rotation = rest == "rx" || rest == "ry" || rest == "rz";
            if (!rotation && rest != "u" && !is_named_gate(rest)) {
                fail(tokens_[0], "unknown gate '" + std::string(kw) + "'");
            }
            if (rotation) {
                expect_args(3);
            } else if (is_named_gate(rest)) {
                expect_args(2);
            } else if (tokens_.size() < 4) {
                expect_args(3);
            }
            op.kind = GateOp::Kind::Controlled;
            op.control = qubit(1);
            op.target = qubit(2);
            if (op.control == op.target) {
                fail(tokens_[2], "control equals target");
            }
            if (rotation) {
                op.axis = parse_axis(rest.substr(1));
                op.angle = angle(3);
            } else if (rest == "u") {
                fixed_gate(3, op);
            } else {
                op.u = OneQubitGate::named(rest);
                op.gate_name = std::string(rest);
            }
            return op;
        }
        fail(tokens_[0], "unknown gate '" + std::string(kw) + "'");
    }

  private:
    int line_;
    std::vector<Token> tokens_;
    int n_;
};

} // namespace

CircuitTemplate parse_circuit(std::string_view src) {
    CircuitTemplate out;
    int line_no = 0;
    int header_line = 0;
    std::size_t pos = 0;
    while (pos <= src.size()) {
        const auto nl = src.find('\n', pos);
        std::string_view line = src.substr(
            pos, nl == std::string_view::npos ? std::string_view::npos
                                              : nl - pos);
        pos = nl == std::string_view::npos ? src.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        if (tokens[0].text == "qubits") {
            if (header_line != 0) {
                throw ParseError(line_no, tokens[0].column,
                                 "duplicate header (first at line " +
                                     std::to_string(header_line) + ")");
            }
            if (tokens.size() != 2) {
                throw ParseError(line_no, tokens[0].column,
                                 "'qubits' expects 1 argument");
            }
            const auto v = tokens[1].text;
            int n = 0;
            const auto [ptr, ec] =
                std::from_chars(v.data(), v.data() + v.size(), n);
            if (ec != std::errc{} || ptr != v.data() + v.size() || n < 1 ||
                n > kMaxQubits) {
                throw ParseError(line_no, tokens[1].column,
                                 "bad qubit count '" + std::string(v) + "'");
            }
            out.n = n;
            header_line = line_no;
            continue;
        }
        if (header_line == 0) {
            throw ParseError(line_no, tokens[0].column,
                             "missing 'qubits N' header");
        }
        out.ops.push_back(
            LineParser(line_no, std::move(tokens), out.n).statement());
    }
    if (header_line == 0) {
        throw ParseError(line_no, 1, "missing 'qubits N' header");
    }
    return out;
}

std::string serialize(const CircuitTemplate &tmpl) {
    std::ostringstream os;
    os << "qubits " << tmpl.n << '\n';
    for (const auto &op : tmpl.ops) {
        const bool ctrl = op.kind == GateOp::Kind::Controlled;
        if (op.axis) {
            os << (ctrl ? "cr" : "r")
               << static_cast<char>(std::tolower(axis_name(*op.axis)));
        } else if (ctrl && !op.gate_name.empty() && op.gate_name != "i" &&
                   op.gate_name != "id") {
            os << 'c' << op.gate_name;
        } else {
            os << (ctrl ? "cu" : "u");
        }
        if (ctrl) {
            os << " q" << op.control;
        }
        os << " q" << op.target;
        if (op.axis) {
            os << ' '
               << (op.angle.is_ref() ? "$" + op.angle.name
                                     : format_real(op.angle.value));
        } else if (!op.gate_name.empty()) {
            if (!ctrl || op.gate_name == "i" || op.gate_name == "id") {
                os << ' ' << op.gate_name;
            }
        } else {
            for (const auto &e : op.u.entries()) {
                os << ' ' << format_amplitude(e);
            }
        }
        os << '\n';
    }
    return os.str();
}

Circuit bind(const CircuitTemplate &tmpl, const ParamTable &params) {
    std::vector<std::string> missing;
    for (const auto &name : tmpl.parameters()) {
        if (!params.contains(name)) {
            missing.push_back(name);
        }
    }
    if (!missing.empty()) {
        throw BindError(std::move(missing));
    }
    Circuit c;
    c.n = tmpl.n;
    c.ops.reserve(tmpl.ops.size());
    for (const auto &op : tmpl.ops) {
        GateOp g{op.kind, op.control, op.target, op.u, std::nullopt};
        if (op.axis) {
            const double theta =
                op.angle.is_ref() ? params.at(op.angle.name) : op.angle.value;
            if (!std::isfinite(theta)) {
                throw ValidationError("parameter $" + op.angle.name +
                                      " is not finite");
            }
            g.u = rotation_gate(*op.axis, theta);
            g.rotation = RotationLabel{*op.axis, theta};
        }
        c.ops.push_back(std::move(g));
    }
    c.validate();
    return c;
}

CircuitTemplate as_template(const Circuit &circuit) {
    CircuitTemplate t;
    t.n = circuit.n;
    for (const auto &g : circuit.ops) {
        TemplateOp op;
        op.kind = g.kind;
        op.control = g.control;
        op.target = g.target;
        if (g.rotation) {
            op.axis = g.rotation->axis;
            op.angle = ParamExpr::literal(g.rotation->theta);
        } else {
            op.u = g.u;
            for (const auto name : kNamedGates) {
                if (OneQubitGate::named(name) == g.u) {
                    op.gate_name = std::string(name);
                    break;
                }
            }
        }
        t.ops.push_back(std::move(op));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Templates

CircuitTemplate hea_template(int n, int layers, const HeaOptions &opts) {
    if (n < 2) {
        throw ValidationError("HEA needs at least 2 qubits");
    }
    check_register(n);
    if (layers < 1) {
        throw ValidationError("HEA needs at least 1 layer");
    }
    const int columns = opts.paper16 ? 4 : 3;
    CircuitTemplate t;
    t.n = n;
    for (int l = 1; l <= layers; ++l) {
        const std::string ls = "_l" + std::to_string(l);
        for (int col = 1; col <= columns; ++col) {
            for (int j = 1; j <= n; ++j) {
                TemplateOp op;
                op.target = j;
                op.axis = opts.rotation_axis;
                op.angle = ParamExpr::ref("q" + std::to_string(j) + "_c" +
                                          std::to_string(col) + ls);
                t.ops.push_back(std::move(op));
            }
        }
        for (int i = 1; i < n; ++i) {
            TemplateOp op;
            op.kind = GateOp::Kind::Controlled;
            op.control = i;
            op.target = i + 1;
            if (opts.paper16) {
                op.u = OneQubitGate::pauli_x();
                op.gate_name = "x";
            } else {
                op.axis = opts.entangler_axis;
                op.angle = ParamExpr::ref("ent" + std::to_string(i) + ls);
            }
            t.ops.push_back(std::move(op));
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Hamiltonian decomposition

DenseMatrix HamiltonianGroup::dense_hamiltonian() const {
    DenseMatrix acc(dim);
    for (const auto &h : factors) {
        acc += realize_dense(h);
    }
    return acc;
}

DenseMatrix HamiltonianGroup::unitary() const {
    DenseMatrix acc = DenseMatrix::identity(dim);
    for (const auto &h : factors) {
        acc = exp_minus_iH(h) * acc;
    }
    return acc;
}

std::vector<HamiltonianGroup> circuit_hamiltonians(const Circuit &circuit) {
    circuit.validate();
    const int n = circuit.n;
    const std::size_t dim = pow2(n);
    std::vector<HamiltonianGroup> groups;
    std::vector<bool> used(n + 1, false);
    bool open_string = false;
    for (std::size_t k = 0; k < circuit.ops.size(); ++k) {
        const auto &op = circuit.ops[k];
        if (op.kind == GateOp::Kind::Controlled) {
            open_string = false;
            HamiltonianGroup g{HamiltonianGroup::Kind::Controlled, dim, k, 1,
                               {}, std::nullopt};
            g.factors.push_back(
                hamiltonian_cu({n, op.control, op.target, op.u}));
            groups.push_back(std::move(g));
            continue;
        }
        if (!open_string || used[op.target]) {
            std::fill(used.begin(), used.end(), false);
            groups.push_back({HamiltonianGroup::Kind::String, dim, k, 0, {},
                              std::vector<PauliStringTerm>{}});
            open_string = true;
        }
        auto &g = groups.back();
        used[op.target] = true;
        ++g.op_count;
        g.factors.push_back(
            hamiltonian_sj(n, op.target, eigenpairs_2x2(op.u)));
        if (g.pauli && op.rotation) {
            g.pauli->push_back(
                {op.rotation->theta / 2.0, op.rotation->axis, op.target, n});
        } else {
            g.pauli.reset();
        }
    }
    return groups;
}

DenseMatrix reconstruct_unitary(const std::vector<HamiltonianGroup> &groups,
                                int n) {
    DenseMatrix acc = DenseMatrix::identity(pow2(n));
    for (const auto &g : groups) {
        acc = g.unitary() * acc;
    }
    return acc;
}

} // namespace sparsepqc
