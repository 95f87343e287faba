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
#include "sparsepqc/qindex.hpp"

#include <string>

#include "sparsepqc/core.hpp"

namespace sparsepqc {

void check_register(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw ValidationError("register size " + std::to_string(n) +
                              " out of range");
    }
}

void check_qubit(int alpha, int n) {
    check_register(n);
    if (alpha < 1 || alpha > n) {
        throw ValidationError("qubit out of range: q" + std::to_string(alpha) +
                              " in a " + std::to_string(n) + "-qubit register");
    }
}

int bit_at(BasisIndex k, int alpha, int n) {
    check_qubit(alpha, n);
    return (k & qubit_mask(alpha, n)) != 0 ? 1 : 0;
}

std::vector<IndexRange> control_blocks(int n, int i) {
    check_qubit(i, n);
    const BasisIndex block = pow2(n - i);
    const BasisIndex count = pow2(i - 1);
    std::vector<IndexRange> out;
    out.reserve(count);
    for (BasisIndex l = 0; l < count; ++l) {
        out.push_back({(2 * l + 1) * block, (2 * l + 2) * block});
    }
    return out;
}

BasisIndex partner_index(BasisIndex k, int j, int n) {
    check_qubit(j, n);
    if (k >= pow2(n)) {
        throw ValidationError("basis index out of range");
    }
    return k ^ qubit_mask(j, n);
}

BlockLayout make_layout(int n, int i, int j) {
    check_qubit(i, n);
    check_qubit(j, n);
    if (i == j) {
        throw ValidationError("control equals target");
    }
    BlockLayout layout{};
    layout.n = n;
    layout.i = i;
    layout.j = j;
    layout.block = pow2(n - i);
    layout.stride = pow2(n - j);
    layout.pair_span = pow2(n - j + 1);
    layout.sub_blocks = i < j ? pow2(j - i - 1) : 0;
    layout.cross = i > j ? pow2(i - j) : 0;
    return layout;
}

} // namespace sparsepqc
