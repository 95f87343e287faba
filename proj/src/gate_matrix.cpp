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
#include "sparsepqc/gate_matrix.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace sparsepqc {

// ---------------------------------------------------------------------------
// TwoSparseRow

TwoSparseRow::TwoSparseRow(std::initializer_list<SparseEntry> entries) {
    for (const auto &e : entries) {
        insert(e.col, e.value);
    }
}

void TwoSparseRow::insert(BasisIndex col, Amplitude value) {
    if (count_ == 2) {
        throw ValidationError("row already holds two entries");
    }
    for (std::size_t k = 0; k < count_; ++k) {
        if (slots_[k].col == col) {
            throw ValidationError("duplicate column " + std::to_string(col) +
                                  " in sparse row");
        }
    }
    slots_[count_++] = {col, value};
    if (count_ == 2 && slots_[0].col > slots_[1].col) {
        std::swap(slots_[0], slots_[1]);
    }
}

bool TwoSparseRow::operator==(const TwoSparseRow &other) const {
    return std::ranges::equal(entries(), other.entries());
}

// ---------------------------------------------------------------------------
// SparseUnitary

SparseUnitary::SparseUnitary(std::size_t dim, std::vector<TwoSparseRow> rows)
    : dim_(dim), rows_(std::move(rows)) {
    if (rows_.size() != dim_) {
        throw ValidationError("sparse unitary: row count does not match dim");
    }
    for (const auto &row : rows_) {
        for (const auto &e : row.entries()) {
            if (e.col >= dim_) {
                throw ValidationError("sparse unitary: column out of range");
            }
        }
    }
}

SparseUnitary SparseUnitary::identity(std::size_t dim) {
    SparseUnitary out(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        out.rows_[k].insert(k, 1.0);
    }
    return out;
}

SparseUnitary SparseUnitary::from_dense(const DenseMatrix &m) {
    SparseUnitary out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (m(r, c) != Amplitude{}) {
                out.rows_[r].insert(c, m(r, c));
            }
        }
    }
    return out;
}

DenseMatrix SparseUnitary::to_dense() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (const auto &e : rows_[r].entries()) {
            out(r, e.col) = e.value;
        }
    }
    return out;
}

std::vector<Amplitude>
SparseUnitary::apply(std::span<const Amplitude> vec) const {
    if (vec.size() != dim_) {
        throw ValidationError("sparse mat-vec: dimension mismatch");
    }
    std::vector<Amplitude> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Amplitude acc{};
        for (const auto &e : rows_[r].entries()) {
            acc += e.value * vec[e.col];
        }
        out[r] = acc;
    }
    return out;
}

std::size_t SparseUnitary::max_row_count() const {
    std::size_t best = 0;
    for (const auto &row : rows_) {
        best = std::max(best, row.size());
    }
    return best;
}

std::size_t SparseUnitary::max_column_count() const {
    std::vector<std::uint32_t> counts(dim_, 0);
    for (const auto &row : rows_) {
        for (const auto &e : row.entries()) {
            ++counts[e.col];
        }
    }
    return counts.empty() ? 0 : *std::ranges::max_element(counts);
}

bool SparseUnitary::is_unitary(double tol) const {
    // (U^dagger U)_{ab} = sum_k conj(U_ka) U_kb; each row contributes to at
    // most four Gram entries.
    std::unordered_map<std::uint64_t, Amplitude> gram;
    gram.reserve(4 * dim_);
    for (const auto &row : rows_) {
        for (const auto &a : row.entries()) {
            for (const auto &b : row.entries()) {
                gram[a.col * dim_ + b.col] += std::conj(a.value) * b.value;
            }
        }
    }
    for (std::size_t k = 0; k < dim_; ++k) {
        if (gram.find(k * dim_ + k) == gram.end()) {
            return false;
        }
    }
    for (const auto &[key, value] : gram) {
        const bool diagonal = key / dim_ == key % dim_;
        const Amplitude expected = diagonal ? 1.0 : 0.0;
        if (!(std::abs(value - expected) <= tol)) {
            return false;
        }
    }
    return true;
}

bool SparseUnitary::is_identity() const {
    for (std::size_t r = 0; r < dim_; ++r) {
        const auto &row = rows_[r];
        if (row.size() != 1 || row[0].col != r || row[0].value != 1.0) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Specs

void ControlledGateSpec::validate() const {
    if (n < 2) {
        throw ValidationError("controlled gate needs at least 2 qubits");
    }
    check_qubit(i, n);
    check_qubit(j, n);
    if (i == j) {
        throw ValidationError("control equals target");
    }
}

void SingleQubitSpec::validate() const { check_qubit(j, n); }

// ---------------------------------------------------------------------------
// Builders

std::vector<TwoSparseRow> uhat1_rows(BasisIndex stride,
                                     const OneQubitGate &u) {
    std::vector<TwoSparseRow> rows(2 * stride);
    for (BasisIndex r = 0; r < stride; ++r) {
        rows[r].insert(r, u.u11());
        rows[r].insert(r + stride, u.u12());
        rows[r + stride].insert(r, u.u21());
        rows[r + stride].insert(r + stride, u.u22());
    }
    return rows;
}

namespace {

void place_rows(SparseUnitary &out, BasisIndex offset,
                const std::vector<TwoSparseRow> &rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto &dst = out.row(offset + r);
        for (const auto &e : rows[r].entries()) {
            // Zero entries of u (e.g. a diagonal gate) are not stored.
            if (e.value == Amplitude(0.0)) {
                continue;
            }
            dst.insert(offset + e.col, e.value);
        }
    }
}

void place_identity(SparseUnitary &out, BasisIndex offset, BasisIndex size) {
    for (BasisIndex r = 0; r < size; ++r) {
        out.row(offset + r).insert(offset + r, 1.0);
    }
}

} // namespace

DenseMatrix build_uhat1_ilj(int n, int i, int j, const OneQubitGate &u) {
    ControlledGateSpec{n, i, j, u}.validate();
    if (i >= j) {
        throw ValidationError("build_uhat1_ilj requires control < target");
    }
    const BasisIndex stride = pow2(n - j);
    SparseUnitary block(2 * stride);
    place_rows(block, 0, uhat1_rows(stride, u));
    return block.to_dense();
}

std::vector<TwoSparseRow> uhat_row_block(int n, int i, int j,
                                         const OneQubitGate &u, BasisIndex l,
                                         bool underline) {
    ControlledGateSpec{n, i, j, u}.validate();
    if (i <= j) {
        throw ValidationError("uhat_row_block requires control > target");
    }
    const BasisIndex block = pow2(n - i);
    const BasisIndex stride = pow2(n - j);
    const BasisIndex upper_count = pow2(i - j);
    const BasisIndex limit = underline ? upper_count - 1 : upper_count;
    if (l < 1 || l > limit) {
        throw ValidationError("row block index out of range");
    }
    const bool odd = (l % 2) == 1;
    const BasisIndex base = (l - 1) * block;
    std::vector<TwoSparseRow> rows(block);
    for (BasisIndex p = 0; p < block; ++p) {
        const BasisIndex near = base + p;
        const BasisIndex far = base + p + stride;
        if (!underline) {
            if (odd) {
                rows[p].insert(near, u.u11());
                rows[p].insert(far, u.u12());
            } else {
                rows[p].insert(near, 1.0);
            }
        } else {
            if (odd) {
                rows[p].insert(near, u.u21());
                rows[p].insert(far, u.u22());
            } else {
                rows[p].insert(far, 1.0);
            }
        }
    }
    return rows;
}

SparseUnitary build_uhat_igj(int n, int i, int j, const OneQubitGate &u) {
    const BasisIndex block = pow2(n - i);
    const BasisIndex upper_count = pow2(i - j);
    const BasisIndex order = pow2(n - j + 1) - block;
    std::vector<TwoSparseRow> rows;
    rows.reserve(order);
    for (BasisIndex l = 1; l <= upper_count; ++l) {
        auto part = uhat_row_block(n, i, j, u, l, false);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    for (BasisIndex l = 1; l < upper_count; ++l) {
        auto part = uhat_row_block(n, i, j, u, l, true);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return SparseUnitary(order, std::move(rows));
}

std::vector<DiagonalBlock> cu_block_structure(int n, int i, int j) {
    const BlockLayout layout = make_layout(n, i, j);
    std::vector<DiagonalBlock> blocks;
    if (i < j) {
        const BasisIndex pairs = pow2(i - 1);
        for (BasisIndex b = 0; b < pairs; ++b) {
            const BasisIndex offset = 2 * b * layout.block;
            blocks.push_back({offset, layout.block, BlockKind::Identity});
            blocks.push_back(
                {offset + layout.block, layout.block, BlockKind::Uhat});
        }
    } else {
        const BasisIndex pairs = pow2(j - 1);
        const BasisIndex order = layout.pair_span - layout.block;
        for (BasisIndex b = 0; b < pairs; ++b) {
            const BasisIndex offset = b * layout.pair_span;
            blocks.push_back({offset, layout.block, BlockKind::Identity});
            blocks.push_back({offset + layout.block, order, BlockKind::Uhat});
        }
    }
    return blocks;
}

SparseUnitary build_cu_sparse(const ControlledGateSpec &spec) {
    spec.validate();
    const auto [n, i, j, u] = spec;
    const BlockLayout layout = make_layout(n, i, j);
    SparseUnitary out(pow2(n));

    if (i < j) {
        const auto inner = uhat1_rows(layout.stride, u);
        for (const auto &blk : cu_block_structure(n, i, j)) {
            if (blk.kind == BlockKind::Identity) {
                place_identity(out, blk.offset, blk.size);
                continue;
            }
            for (BasisIndex c = 0; c < layout.sub_blocks; ++c) {
                place_rows(out, blk.offset + c * layout.pair_span, inner);
            }
        }
    } else {
        const SparseUnitary uhat = build_uhat_igj(n, i, j, u);
        for (const auto &blk : cu_block_structure(n, i, j)) {
            if (blk.kind == BlockKind::Identity) {
                place_identity(out, blk.offset, blk.size);
            } else {
                place_rows(out, blk.offset, uhat.rows());
            }
        }
    }
    return out;
}

SparseUnitary build_sj_sparse(int n, int j, const OneQubitGate &u) {
    SingleQubitSpec{n, j, u}.validate();
    const BasisIndex stride = pow2(n - j);
    const BasisIndex copies = pow2(j - 1);
    const auto inner = uhat1_rows(stride, u);
    SparseUnitary out(pow2(n));
    for (BasisIndex m = 0; m < copies; ++m) {
        place_rows(out, m * 2 * stride, inner);
    }
    return out;
}

SparseUnitary build_sparse(const GateDescription &gate) {
    return std::visit(
        [](const auto &g) -> SparseUnitary {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, SingleQubitSpec>) {
                return build_sj_sparse(g.n, g.j, g.u);
            } else {
                return build_cu_sparse(g);
            }
        },
        gate);
}

// ---------------------------------------------------------------------------
// Dense oracle

namespace {

DenseMatrix kron_chain(const std::vector<DenseMatrix> &factors) {
    DenseMatrix acc = DenseMatrix::identity(1);
    for (const auto &f : factors) {
        acc = kron(acc, f);
    }
    return acc;
}

} // namespace

DenseMatrix dense_kron_oracle(const GateDescription &gate, int max_qubits) {
    const int n = std::visit([](const auto &g) { return g.n; }, gate);
    if (n > max_qubits) {
        throw ValidationError("dense oracle limited to " +
                              std::to_string(max_qubits) + " qubits");
    }
    const DenseMatrix id2 = DenseMatrix::identity(2);
    if (const auto *single = std::get_if<SingleQubitSpec>(&gate)) {
        single->validate();
        return kron(kron(DenseMatrix::identity(pow2(single->j - 1)),
                         single->u.dense()),
                    DenseMatrix::identity(pow2(n - single->j)));
    }
    const auto &spec = std::get<ControlledGateSpec>(gate);
    spec.validate();
    const DenseMatrix proj0(2, {1.0, 0.0, 0.0, 0.0});
    const DenseMatrix proj1(2, {0.0, 0.0, 0.0, 1.0});
    std::vector<DenseMatrix> off_branch;
    std::vector<DenseMatrix> on_branch;
    for (int q = 1; q <= n; ++q) {
        if (q == spec.i) {
            off_branch.push_back(proj0);
            on_branch.push_back(proj1);
        } else if (q == spec.j) {
            off_branch.push_back(id2);
            on_branch.push_back(spec.u.dense());
        } else {
            off_branch.push_back(id2);
            on_branch.push_back(id2);
        }
    }
    DenseMatrix out = kron_chain(off_branch);
    out += kron_chain(on_branch);
    return out;
}

} // namespace sparsepqc
