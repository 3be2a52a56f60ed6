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

#include "qatpg/pauli.hpp"

#include <bit>
#include <cctype>
#include <sstream>

#include "qatpg/gf2.hpp"

namespace qatpg {

SignedPauli SignedPauli::single(int n, int qubit, char axis, bool negative) {
    if (qubit < 1 || qubit > n) throw ContractError("pauli qubit out of range");
    SignedPauli p(n);
    switch (axis) {
        case 'X': p.set_x(qubit, true); break;
        case 'Y': p.set_x(qubit, true); p.set_z(qubit, true); break;
        case 'Z': p.set_z(qubit, true); break;
        default: throw ContractError("pauli axis must be X, Y or Z");
    }
    p.neg_ = negative;
    return p;
}

bool SignedPauli::is_identity_bits() const {
    for (auto w : xw_)
        if (w) return false;
    for (auto w : zw_)
        if (w) return false;
    return true;
}

int SignedPauli::weight() const {
    int w = 0;
    for (size_t i = 0; i < xw_.size(); ++i)
        w += std::popcount(xw_[i] | zw_[i]);
    return w;
}

std::vector<int> SignedPauli::support() const {
    std::vector<int> out;
    for (int q = 1; q <= n_; ++q)
        if (x(q) || z(q)) out.push_back(q);
    return out;
}

bool SignedPauli::commutes_with(const SignedPauli& other) const {
    if (n_ != other.n_) throw ContractError("pauli qubit counts differ");
    int c = 0;
    for (size_t i = 0; i < xw_.size(); ++i) {
        c += std::popcount(xw_[i] & other.zw_[i]);
        c += std::popcount(zw_[i] & other.xw_[i]);
    }
    return (c & 1) == 0;
}

PauliProduct pauli_mul(const SignedPauli& p, const SignedPauli& q) {
    if (p.n_ != q.n_) throw ContractError("pauli qubit counts differ");
    PauliProduct out;
    out.op = SignedPauli(p.n_);
    int plus1 = 0, plus3 = 0;
    for (size_t i = 0; i < p.xw_.size(); ++i) {
        uint64_t x1 = p.xw_[i], z1 = p.zw_[i];
        uint64_t x2 = q.xw_[i], z2 = q.zw_[i];
        uint64_t active = (x1 | z1) & (x2 | z2) & ((x1 ^ x2) | (z1 ^ z2));
        // i^{+1} for the cyclic products XY, YZ, ZX; i^{-1} for the rest.
        uint64_t cyc = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) |
                       (~x1 & z1 & x2 & ~z2);
        plus1 += std::popcount(cyc);
        plus3 += std::popcount(active & ~cyc);
        out.op.xw_[i] = x1 ^ x2;
        out.op.zw_[i] = z1 ^ z2;
    }
    int g = (plus1 + 3 * plus3) & 3;
    if (p.neg_) g = (g + 2) & 3;
    if (q.neg_) g = (g + 2) & 3;
    out.phase_exp = g;
    return out;
}

SignedPauli mul_signed(const SignedPauli& p, const SignedPauli& q) {
    PauliProduct r = pauli_mul(p, q);
    if (r.phase_exp & 1)
        throw ContractError("pauli product has imaginary phase");
    r.op.set_negative(r.phase_exp == 2);
    return r.op;
}

bool independent(const std::vector<SignedPauli>& set) {
    if (set.empty()) return true;
    int n = set[0].num_qubits();
    BitMatrix m(int(set.size()), 2 * n);
    for (size_t i = 0; i < set.size(); ++i) {
        if (set[i].num_qubits() != n)
            throw ContractError("pauli qubit counts differ");
        m.load_row(int(i), set[i]);
    }
    return m.rank() == int(set.size());
}

SignedPauli SignedPauli::embedded(int n_total, const std::vector<int>& wires) const {
    if (int(wires.size()) != n_) throw ContractError("wire list size mismatch");
    SignedPauli out(n_total);
    out.neg_ = neg_;
    for (int q = 1; q <= n_; ++q) {
        int w = wires[q - 1];
        if (w < 1 || w > n_total) throw ContractError("wire out of range");
        out.set_x(w, x(q));
        out.set_z(w, z(q));
    }
    return out;
}

SignedPauli SignedPauli::restricted(const std::vector<int>& wires) const {
    SignedPauli out(int(wires.size()));
    out.neg_ = neg_;
    for (size_t p = 0; p < wires.size(); ++p) {
        out.set_x(int(p) + 1, x(wires[p]));
        out.set_z(int(p) + 1, z(wires[p]));
    }
    return out;
}

SignedPauli SignedPauli::drop_leading(int m) const {
    SignedPauli out(n_ - m);
    out.neg_ = neg_;
    for (int q = m + 1; q <= n_; ++q) {
        out.set_x(q - m, x(q));
        out.set_z(q - m, z(q));
    }
    for (int q = 1; q <= m; ++q)
        if (x(q)) throw ContractError("dropped qubits must be I or Z");
    return out;
}

std::string SignedPauli::str() const {
    std::ostringstream os;
    if (neg_) os << '-';
    bool first = true;
    for (int q = 1; q <= n_; ++q) {
        char c = 0;
        if (x(q) && z(q)) c = 'Y';
        else if (x(q)) c = 'X';
        else if (z(q)) c = 'Z';
        if (!c) continue;
        if (!first) os << '*';
        os << c << q;
        first = false;
    }
    if (first) os << 'I';
    return os.str();
}

SignedPauli SignedPauli::parse(const std::string& text, int n) {
    size_t i = 0;
    auto fail = [&]() -> ContractError {
        return ContractError("bad pauli literal: '" + text + "'");
    };
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    SignedPauli p(n);
    p.neg_ = neg;
    if (i < text.size() && text[i] == 'I' && i + 1 == text.size()) return p;
    while (i < text.size()) {
        char axis = text[i++];
        if (axis != 'X' && axis != 'Y' && axis != 'Z') throw fail();
        if (i >= text.size() || !std::isdigit((unsigned char)text[i])) throw fail();
        int q = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
            q = q * 10 + (text[i++] - '0');
        if (q < 1 || q > n) throw fail();
        if (p.x(q) || p.z(q)) throw fail();  // repeated qubit
        if (axis == 'X' || axis == 'Y') p.set_x(q, true);
        if (axis == 'Z' || axis == 'Y') p.set_z(q, true);
        if (i < text.size()) {
            if (text[i] != '*') throw fail();
            ++i;
            if (i == text.size()) throw fail();
        }
    }
    return p;
}

uint64_t SignedPauli::hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(uint64_t(n_));
    mix(neg_ ? 0x9e3779b97f4a7c15ull : 0);
    for (auto w : xw_) mix(w);
    for (auto w : zw_) mix(w);
    return h;
}

// Elementary conjugations. Sign rules follow the standard tableau update
// identities, e.g. HYH = -Y, SXS^dag = Y, SYS^dag = -X.
void SignedPauli::conj_h(int q) {
    bool xb = x(q), zb = z(q);
    set_x(q, zb);
    set_z(q, xb);
    if (xb && zb) flip_sign();
}
void SignedPauli::conj_s(int q) {
    bool xb = x(q), zb = z(q);
    if (xb && zb) flip_sign();
    set_z(q, zb ^ xb);
}
void SignedPauli::conj_sdg(int q) {
    bool xb = x(q), zb = z(q);
    if (xb && !zb) flip_sign();
    set_z(q, zb ^ xb);
}
void SignedPauli::conj_x(int q) {
    if (z(q)) flip_sign();
}
void SignedPauli::conj_y(int q) {
    if (x(q) != z(q)) flip_sign();
}
void SignedPauli::conj_z(int q) {
    if (x(q)) flip_sign();
}
void SignedPauli::conj_cnot(int c, int t) {
    bool xc = x(c), zc = z(c), xt = x(t), zt = z(t);
    if (xc && zt && (xt == zc)) flip_sign();
    set_x(t, xt ^ xc);
    set_z(c, zc ^ zt);
}
void SignedPauli::conj_swap(int a, int b) {
    bool xa = x(a), za = z(a), xb = x(b), zb = z(b);
    set_x(a, xb); set_z(a, zb);
    set_x(b, xa); set_z(b, za);
}

}  // namespace qatpg
