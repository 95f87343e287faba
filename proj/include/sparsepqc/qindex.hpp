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

// Index arithmetic over the computational basis of an n-qubit register.
//
// Basis states are labelled 0 .. 2^n - 1 with qubit 1 the most significant
// bit: k = sum_{a=1..n} k_a 2^{n-a}. The leaves of the complete binary tree
// of depth n enumerate exactly this order. Qubit positions are 1-based,
// basis indices are 0-based; to_display_index/from_display_index convert to
// the 1-based labels used when amplitudes are written a_1 .. a_{2^n}.

#include <cstdint>
#include <vector>

namespace sparsepqc {

using BasisIndex = std::uint64_t;

/// Largest register the bit arithmetic supports.
inline constexpr int kMaxQubits = 62;

[[nodiscard]] constexpr BasisIndex pow2(int e) { return BasisIndex{1} << e; }

/// Mask of qubit `alpha` (1-based, MSB first) in an n-qubit index.
[[nodiscard]] constexpr BasisIndex qubit_mask(int alpha, int n) {
    return pow2(n - alpha);
}

[[nodiscard]] constexpr BasisIndex to_display_index(BasisIndex k) {
    return k + 1;
}
[[nodiscard]] constexpr BasisIndex from_display_index(BasisIndex k) {
    return k - 1;
}

void check_register(int n);
void check_qubit(int alpha, int n);

/// k_alpha, the alpha-th qubit of |k>.
int bit_at(BasisIndex k, int alpha, int n);

struct IndexRange {
    BasisIndex begin;
    BasisIndex end;

    [[nodiscard]] BasisIndex size() const { return end - begin; }
    bool operator==(const IndexRange &) const = default;
};

/// The 2^{i-1} ranges of consecutive indices whose qubit i is 1.
std::vector<IndexRange> control_blocks(int n, int i);

/// k with qubit j flipped (offset +-2^{n-j}).
BasisIndex partner_index(BasisIndex k, int j, int n);

/// Block sizes that structure a controlled gate with control i, target j.
struct BlockLayout {
    int n;
    int i;
    int j;
    BasisIndex block;     ///< 2^{n-i}, length of a run with fixed qubit i
    BasisIndex stride;    ///< 2^{n-j}, target partner offset
    BasisIndex pair_span; ///< 2^{n-j+1}
    BasisIndex sub_blocks; ///< 2^{j-i-1} when i < j, otherwise 0
    BasisIndex cross;      ///< 2^{i-j} when i > j, otherwise 0
};

BlockLayout make_layout(int n, int i, int j);

} // namespace sparsepqc
