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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qatpg/errors.hpp"

namespace qatpg {

class SignedPauli;
struct PauliProduct;
PauliProduct pauli_mul(const SignedPauli& p, const SignedPauli& q);

/// An n-qubit Pauli operator with a +/-1 sign, stored as separate packed
/// X-bit and Z-bit blocks over GF(2). Per-qubit encoding: 00=I, 01=Z,
/// 10=X, 11=Y.
class SignedPauli {
  public:
    SignedPauli() = default;
    explicit SignedPauli(int n)
        : n_(n), xw_(word_count(n), 0), zw_(word_count(n), 0) {}

    static SignedPauli identity(int n) { return SignedPauli(n); }
    // axis is one of 'X','Y','Z'; qubit is 1-based.
    static SignedPauli single(int n, int qubit, char axis, bool negative = false);
    // Parses e.g. "-X1*Z3", "Y2", "I", "+I". Qubit indices are 1-based.
    static SignedPauli parse(const std::string& text, int n);

    int num_qubits() const { return n_; }

    bool x(int qubit) const { return get_bit(xw_, qubit - 1); }
    bool z(int qubit) const { return get_bit(zw_, qubit - 1); }
    void set_x(int qubit, bool v) { set_bit(xw_, qubit - 1, v); }
    void set_z(int qubit, bool v) { set_bit(zw_, qubit - 1, v); }

    bool negative() const { return neg_; }
    int sign() const { return neg_ ? -1 : 1; }
    void set_negative(bool v) { neg_ = v; }
    void flip_sign() { neg_ = !neg_; }

    bool is_identity_bits() const;
    bool is_identity() const { return !neg_ && is_identity_bits(); }
    int weight() const;
    std::vector<int> support() const;  // 1-based qubits with non-identity action

    bool commutes_with(const SignedPauli& other) const;

    // Restrict to / embed into other registers. `wires` are 1-based and map
    // local qubit p (1-based) to global wire wires[p-1].
    SignedPauli embedded(int n_total, const std::vector<int>& wires) const;
    SignedPauli restricted(const std::vector<int>& wires) const;
    // Drops the leading `m` qubits (which must act as identity there unless
    // allow_z, in which case Z components are dropped with their +1 phase).
    SignedPauli drop_leading(int m) const;

    std::string str() const;

    bool operator==(const SignedPauli& other) const {
        return n_ == other.n_ && neg_ == other.neg_ && xw_ == other.xw_ &&
               zw_ == other.zw_;
    }
    bool operator!=(const SignedPauli& other) const { return !(*this == other); }

    uint64_t hash() const;

    // Raw packed words, X block then Z block; used by the GF(2) machinery.
    const std::vector<uint64_t>& x_words() const { return xw_; }
    const std::vector<uint64_t>& z_words() const { return zw_; }

    // In-place conjugation by elementary Clifford gates (sign tracked).
    // These back both the tableau engine and the CHP simulator rows.
    void conj_h(int q);
    void conj_s(int q);
    void conj_sdg(int q);
    void conj_x(int q);
    void conj_y(int q);
    void conj_z(int q);
    void conj_cnot(int c, int t);
    void conj_swap(int a, int b);

    static int word_count(int n) { return (n + 63) / 64; }

  private:
    static bool get_bit(const std::vector<uint64_t>& w, int i) {
        return (w[i >> 6] >> (i & 63)) & 1;
    }
    static void set_bit(std::vector<uint64_t>& w, int i, bool v) {
        if (v)
            w[i >> 6] |= uint64_t(1) << (i & 63);
        else
            w[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    int n_ = 0;
    std::vector<uint64_t> xw_, zw_;
    bool neg_ = false;

    friend PauliProduct pauli_mul(const SignedPauli&, const SignedPauli&);
};

/// P*Q = i^phase_exp * op, where op always carries a positive sign and
/// phase_exp in {0,1,2,3} absorbs the input signs.
struct PauliProduct {
    int phase_exp = 0;
    SignedPauli op;
};

// Product of two signed Paulis that is itself a signed Pauli (phase +/-1).
// Throws ContractError if the product carries an imaginary phase.
SignedPauli mul_signed(const SignedPauli& p, const SignedPauli& q);

inline bool commutes(const SignedPauli& p, const SignedPauli& q) {
    return p.commutes_with(q);
}

// True iff the GF(2) symplectic vectors of the operators are linearly
// independent. An empty set is independent.
bool independent(const std::vector<SignedPauli>& set);

struct SignedPauliHash {
    size_t operator()(const SignedPauli& p) const { return size_t(p.hash()); }
};

}  // namespace qatpg
