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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparsepqc/core.hpp"
#include "sparsepqc/engine.hpp"

namespace sparsepqc::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kValidation = 3,
};

inline constexpr double kDefaultTol = 1e-12;

struct GateChoice {
    OneQubitGate u;
    std::optional<RotationLabel> rotation;
};

/// "x", "h", ..., "rx:0.5", "rz:pi/4", "u:e11;e12;e21;e22".
GateChoice parse_gate_spec(std::string_view spec);

/// --tol if given, else $QSIM_TOL, else kDefaultTol.
double resolve_tolerance(std::optional<double> flag, const char *env);

/// Runs one invocation; args exclude the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace sparsepqc::cli
