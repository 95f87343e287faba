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
#pragma once

// JSON documents carry a top-level "schema": 1. Complex numbers are
// [re, im]; sparse matrix entries are [col, re, im].

#include <string>
#include <vector>

#include <json.hpp>

#include "sparsepqc/circuit_ir.hpp"
#include "sparsepqc/engine.hpp"
#include "sparsepqc/gate_matrix.hpp"
#include "sparsepqc/hamiltonian.hpp"
#include "sparsepqc/verify.hpp"

namespace sparsepqc::io {

using nlohmann::json;

inline constexpr int kSchema = 1;

json to_json(Amplitude a);
json to_json(const OneQubitGate &u);
json to_json(const DenseMatrix &m);
/// {dim, rows: [[[col, re, im], ...], ...]}
json to_json(const SparseUnitary &s);
/// {dim, terms: [{z, w: [[re, im], ...]}, ...]}
json to_json(const LocalHamiltonian &h);
json to_json(const PauliStringTerm &t);
json to_json(const HamiltonianGroup &g);
/// {n, ops: [{kind, i?, j, u, rotation?}]}
json to_json(const Circuit &c);

SparseUnitary sparse_from_json(const json &j);
LocalHamiltonian hamiltonian_from_json(const json &j);
Circuit circuit_from_json(const json &j);

/// Array of [re, im], index 0 first.
json state_to_json(const StateVector &s);
StateVector state_from_json(const json &j);

/// Object of name -> number; string values accept angle literals.
ParamTable params_from_json(const json &j);

/// "index,probability" header plus one row per basis index.
std::string probabilities_csv(const std::vector<double> &p);
/// "index,re,im".
std::string amplitudes_csv(const StateVector &s);
/// "theta,error".
std::string sweep_csv(const ErrorSweep &sweep);

/// Wraps a payload as {"schema": 1, "kind": kind, ...payload}.
json document(const std::string &kind, json payload);

} // namespace sparsepqc::io
