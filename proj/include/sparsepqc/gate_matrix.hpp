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

#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "sparsepqc/core.hpp"
#include "sparsepqc/qindex.hpp"

namespace sparsepqc {

struct SparseEntry {
    BasisIndex col;
    Amplitude value;
    bool operator==(const SparseEntry &) const = default;
};

/// Matrix row with at most two stored entries in increasing column order.
class TwoSparseRow {
  public:
    TwoSparseRow() = default;
    TwoSparseRow(std::initializer_list<SparseEntry> entries);

    /// Inserts keeping columns sorted. Throws on a third entry or a
    /// repeated column.
    void insert(BasisIndex col, Amplitude value);

    [[nodiscard]] std::size_t size() const { return count_; }
    [[nodiscard]] bool empty() const { return count_ == 0; }
    [[nodiscard]] const SparseEntry &operator[](std::size_t k) const {
        return slots_[k];
    }
    [[nodiscard]] std::span<const SparseEntry> entries() const {
        return {slots_.data(), count_};
    }

    bool operator==(const TwoSparseRow &other) const;

  private:
    std::array<SparseEntry, 2> slots_{};
    std::uint8_t count_ = 0;
};

/**
 * @brief Row-major 2-sparse representation of a 2^n x 2^n gate unitary.
 *
 * Every row holds at most two entries. The builders below also guarantee at
 * most two per column; `max_column_count` lets tests check it.
 */
class SparseUnitary {
  public:
    SparseUnitary() = default;
    explicit SparseUnitary(std::size_t dim) : dim_(dim), rows_(dim) {}
    SparseUnitary(std::size_t dim, std::vector<TwoSparseRow> rows);

    static SparseUnitary identity(std::size_t dim);
    /// Keeps every nonzero entry; throws if a row has more than two.
    static SparseUnitary from_dense(const DenseMatrix &m);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<TwoSparseRow> &rows() const {
        return rows_;
    }
    [[nodiscard]] const TwoSparseRow &row(std::size_t k) const {
        return rows_[k];
    }
    TwoSparseRow &row(std::size_t k) { return rows_[k]; }

    [[nodiscard]] DenseMatrix to_dense() const;
    [[nodiscard]] std::vector<Amplitude>
    apply(std::span<const Amplitude> vec) const;

    [[nodiscard]] std::size_t max_row_count() const;
    [[nodiscard]] std::size_t max_column_count() const;
    /// Checks U^dagger U = I using only the stored entries.
    [[nodiscard]] bool is_unitary(double tol = kUnitaryTol) const;
    [[nodiscard]] bool is_identity() const;

    bool operator==(const SparseUnitary &) const = default;

  private:
    std::size_t dim_ = 0;
    std::vector<TwoSparseRow> rows_;
};

struct ControlledGateSpec {
    int n;
    int i; ///< control qubit, 1-based
    int j; ///< target qubit, 1-based
    OneQubitGate u;

    void validate() const;
};

struct SingleQubitSpec {
    int n;
    int j;
    OneQubitGate u;

    void validate() const;
};

using GateDescription = std::variant<SingleQubitSpec, ControlledGateSpec>;

/// Rows of the order-2^{n-j+1} block carrying u11/u22 on the diagonal halves
/// and u12/u21 at offset +-2^{n-j}. Columns are local to the block.
std::vector<TwoSparseRow> uhat1_rows(BasisIndex stride, const OneQubitGate &u);

/// Dense form of the repeated block of a controlled gate with i < j.
DenseMatrix build_uhat1_ilj(int n, int i, int j, const OneQubitGate &u);

/**
 * @brief One row block of the non-trivial block of a controlled gate, i > j.
 *
 * Returns the 2^{n-i} rows of the l-th upper block (underline = false,
 * l = 1..2^{i-j}) or of the l-th lower block (underline = true,
 * l = 1..2^{i-j}-1). Odd l carries the entries of u, even l the identity.
 * Columns are local to the order (2^{n-j+1} - 2^{n-i}) block.
 */
std::vector<TwoSparseRow> uhat_row_block(int n, int i, int j,
                                         const OneQubitGate &u, BasisIndex l,
                                         bool underline);

/// The non-trivial block of a controlled gate with i > j, assembled from
/// the upper row blocks stacked above the lower ones.
SparseUnitary build_uhat_igj(int n, int i, int j, const OneQubitGate &u);

enum class BlockKind { Identity, Uhat };

struct DiagonalBlock {
    BasisIndex offset;
    BasisIndex size;
    BlockKind kind;
    bool operator==(const DiagonalBlock &) const = default;
};

/// Diagonal block decomposition of a controlled gate: alternating identity
/// runs of length 2^{n-i} and non-trivial blocks; 2^{i-1} non-trivial blocks
/// when i < j and 2^{j-1} when i > j.
std::vector<DiagonalBlock> cu_block_structure(int n, int i, int j);

SparseUnitary build_cu_sparse(const ControlledGateSpec &spec);

/// I_{2^{j-1}} (x) u (x) I_{2^{n-j}} as 2^{j-1} diagonal copies of the
/// order-2^{n-j+1} block.
SparseUnitary build_sj_sparse(int n, int j, const OneQubitGate &u);

SparseUnitary build_sparse(const GateDescription &gate);

inline constexpr int kDenseOracleCap = 12;

/**
 * Reference construction by Kronecker products. Single-qubit gates use
 * I (x) u (x) I; controlled gates use the projector sum
 * |0><0|_i (x) I + |1><1|_i (x) u_j. O(4^n) memory.
 */
DenseMatrix dense_kron_oracle(const GateDescription &gate,
                              int max_qubits = kDenseOracleCap);

} // namespace sparsepqc
