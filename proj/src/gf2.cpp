// Copyright 2026 The qatpg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qatpg/gf2.hpp"

#include <algorithm>

#include "qatpg/errors.hpp"
#include "qatpg/pauli.hpp"

namespace qatpg {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(size_t(rows) * wpr_, 0) {}

bool BitMatrix::get(int r, int c) const {
    return (data_[size_t(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1;
}

void BitMatrix::set(int r, int c, bool v) {
    uint64_t& w = data_[size_t(r) * wpr_ + (c >> 6)];
    if (v)
        w |= uint64_t(1) << (c & 63);
    else
        w &= ~(uint64_t(1) << (c & 63));
}

void BitMatrix::xor_row(int dst, int src) {
    for (int i = 0; i < wpr_; ++i)
        data_[size_t(dst) * wpr_ + i] ^= data_[size_t(src) * wpr_ + i];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < wpr_; ++i)
        std::swap(data_[size_t(a) * wpr_ + i], data_[size_t(b) * wpr_ + i]);
}

bool BitMatrix::row_zero(int r) const {
    for (int i = 0; i < wpr_; ++i)
        if (data_[size_t(r) * wpr_ + i]) return false;
    return true;
}

void BitMatrix::load_row(int r, const SignedPauli& p) {
    int n = p.num_qubits();
    for (int q = 1; q <= n; ++q) {
        set(r, q - 1, p.x(q));
        set(r, n + q - 1, p.z(q));
    }
}

std::vector<int> BitMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r)
            if (get(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        swap_rows(row, pivot);
        for (int r = 0; r < rows_; ++r)
            if (r != row && get(r, col)) xor_row(r, row);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int BitMatrix::rank() const {
    BitMatrix tmp = *this;
    return int(tmp.rref().size());
}

std::optional<std::vector<bool>> BitMatrix::solve(const BitMatrix& m,
                                                  const std::vector<bool>& b) {
    if (int(b.size()) != m.rows()) throw ContractError("gf2 solve size mismatch");
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.set(r, c, m.get(r, c));
        aug.set(r, m.cols(), b[r]);
    }
    std::vector<int> pivots = aug.rref();
    std::vector<bool> x(m.cols(), false);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols()) return std::nullopt;  // 0 = 1 row
        x[pivots[i]] = aug.get(int(i), m.cols());
    }
    return x;
}

bool symplectic_dot(const std::vector<bool>& a, const std::vector<bool>& b) {
    size_t n = a.size() / 2;
    bool acc = false;
    for (size_t i = 0; i < n; ++i) {
        acc ^= (a[i] && b[n + i]);
        acc ^= (a[n + i] && b[i]);
    }
    return acc;
}

std::vector<bool> pauli_bits(const SignedPauli& p) {
    int n = p.num_qubits();
    std::vector<bool> v(2 * n, false);
    for (int q = 1; q <= n; ++q) {
        v[q - 1] = p.x(q);
        v[n + q - 1] = p.z(q);
    }
    return v;
}

SignedPauli pauli_from_bits(const std::vector<bool>& bits) {
    int n = int(bits.size()) / 2;
    SignedPauli p(n);
    for (int q = 1; q <= n; ++q) {
        p.set_x(q, bits[q - 1]);
        p.set_z(q, bits[n + q - 1]);
    }
    return p;
}

std::vector<std::vector<bool>> rowspace_intersection(
    const std::vector<std::vector<bool>>& a,
    const std::vector<std::vector<bool>>& b) {
    if (a.empty() || b.empty()) return {};
    int w = int(a[0].size());
    // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry the
    // intersection in the right half.
    BitMatrix m(int(a.size() + b.size()), 2 * w);
    for (size_t r = 0; r < a.size(); ++r)
        for (int c = 0; c < w; ++c) {
            m.set(int(r), c, a[r][c]);
            m.set(int(r), w + c, a[r][c]);
        }
    for (size_t r = 0; r < b.size(); ++r)
        for (int c = 0; c < w; ++c) m.set(int(a.size() + r), c, b[r][c]);
    m.rref();
    std::vector<std::vector<bool>> out;
    for (int r = 0; r < m.rows(); ++r) {
        bool left_zero = true, right_zero = true;
        for (int c = 0; c < w && left_zero; ++c)
            if (m.get(r, c)) left_zero = false;
        for (int c = 0; c < w && right_zero; ++c)
            if (m.get(r, w + c)) right_zero = false;
        if (left_zero && !right_zero) {
            std::vector<bool> v(w);
            for (int c = 0; c < w; ++c) v[c] = m.get(r, w + c);
            out.push_back(std::move(v));
        }
    }
    return out;
}

bool in_span(const std::vector<std::vector<bool>>& basis,
             const std::vector<bool>& v) {
    if (basis.empty()) {
        for (bool bit : v)
            if (bit) return false;
        return true;
    }
    int w = int(v.size());
    BitMatrix m(int(basis.size()), w);
    std::vector<bool> rhs = v;
    // Rank test: v in span iff appending v does not raise the rank.
    BitMatrix with(int(basis.size()) + 1, w);
    for (size_t r = 0; r < basis.size(); ++r)
        for (int c = 0; c < w; ++c) {
            m.set(int(r), c, basis[r][c]);
            with.set(int(r), c, basis[r][c]);
        }
    for (int c = 0; c < w; ++c) with.set(int(basis.size()), c, v[c]);
    return with.rank() == m.rank();
}

}  // namespace qatpg
