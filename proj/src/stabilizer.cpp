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

#include "qatpg/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qatpg/gf2.hpp"

namespace qatpg {

namespace {

// Column order for the canonical form: all X bits, then all Z bits.
bool col_bit(const SignedPauli& p, int col) {
    int n = p.num_qubits();
    return col < n ? p.x(col + 1) : p.z(col - n + 1);
}

enum class ReduceStatus { Ok, MinusIdentity };

// Sign-tracked RREF. Dependent rows that reduce to +I are dropped; a row
// reducing to -I reports MinusIdentity.
ReduceStatus reduce_rows(int n, std::vector<SignedPauli>& rows) {
    size_t r = 0;
    for (int col = 0; col < 2 * n && r < rows.size(); ++col) {
        size_t pivot = r;
        while (pivot < rows.size() && !col_bit(rows[pivot], col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && col_bit(rows[i], col))
                rows[i] = mul_signed(rows[i], rows[r]);
        ++r;
    }
    for (size_t i = r; i < rows.size(); ++i)
        if (rows[i].negative()) return ReduceStatus::MinusIdentity;
    rows.resize(r);
    return ReduceStatus::Ok;
}

}  // namespace

StabilizerProjector StabilizerProjector::identity(int n) {
    StabilizerProjector s;
    s.n_ = n;
    return s;
}

StabilizerProjector StabilizerProjector::from_generators(
    int n, std::vector<SignedPauli> gens) {
    for (const auto& g : gens)
        if (g.num_qubits() != n)
            throw ContractError("generator qubit count mismatch");
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].commutes_with(gens[j]))
                throw ContractError("generators must commute");
    if (reduce_rows(n, gens) == ReduceStatus::MinusIdentity)
        throw ContractError("-I is in the generated group");
    StabilizerProjector s;
    s.n_ = n;
    s.gens_ = std::move(gens);
    return s;
}

double StabilizerProjector::trace() const { return std::ldexp(1.0, rank_log2()); }

int StabilizerProjector::sign_of(const SignedPauli& target) const {
    SignedPauli acc = SignedPauli::identity(n_);
    std::vector<bool> rem = pauli_bits(target);
    for (const auto& g : gens_) {
        // Canonical generators have a unique pivot column; reduce against it.
        std::vector<bool> gb = pauli_bits(g);
        int pivot = -1;
        for (int c = 0; c < 2 * n_; ++c)
            if (gb[c]) {
                pivot = c;
                break;
            }
        if (pivot >= 0 && rem[pivot]) {
            acc = mul_signed(acc, g);
            for (int c = 0; c < 2 * n_; ++c) rem[c] = rem[c] ^ gb[c];
        }
    }
    for (bool bit : rem)
        if (bit) return 0;
    return acc.sign();
}

bool StabilizerProjector::contains(const SignedPauli& p) const {
    int s = sign_of(p);
    return s != 0 && s == p.sign();
}

std::vector<SignedPauli> StabilizerProjector::elements() const {
    if (num_generators() > 20) throw ContractError("group too large to enumerate");
    std::vector<SignedPauli> out;
    out.push_back(SignedPauli::identity(n_));
    for (const auto& g : gens_) {
        size_t sz = out.size();
        for (size_t i = 0; i < sz; ++i) out.push_back(mul_signed(out[i], g));
    }
    return out;
}

StabilizerProjector StabilizerProjector::conjugated_by_pauli(
    const SignedPauli& p) const {
    std::vector<SignedPauli> gens = gens_;
    for (auto& g : gens)
        if (!g.commutes_with(p)) g.flip_sign();
    return from_generators(n_, std::move(gens));
}

StabilizerProjector StabilizerProjector::embedded(
    int n_total, const std::vector<int>& wires) const {
    std::vector<SignedPauli> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(g.embedded(n_total, wires));
    return from_generators(n_total, std::move(gens));
}

StabilizerProjector StabilizerProjector::tensor(const StabilizerProjector& a,
                                                const StabilizerProjector& b) {
    int n = a.n_ + b.n_;
    std::vector<SignedPauli> gens;
    std::vector<int> aw(a.n_), bw(b.n_);
    for (int i = 0; i < a.n_; ++i) aw[i] = i + 1;
    for (int i = 0; i < b.n_; ++i) bw[i] = a.n_ + i + 1;
    for (const auto& g : a.gens_) gens.push_back(g.embedded(n, aw));
    for (const auto& g : b.gens_) gens.push_back(g.embedded(n, bw));
    return from_generators(n, std::move(gens));
}

std::string StabilizerProjector::str() const {
    std::ostringstream os;
    os << '<';
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ',';
        os << gens_[i].str();
    }
    os << '>';
    return os.str();
}

StabilizerProjector StabilizerProjector::parse(const std::string& text, int n) {
    if (text.size() < 2 || text.front() != '<' || text.back() != '>')
        throw ContractError("bad projector literal: " + text);
    std::string body = text.substr(1, text.size() - 2);
    std::vector<SignedPauli> gens;
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        // strip blanks
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (!item.empty()) gens.push_back(SignedPauli::parse(item, n));
    }
    return from_generators(n, std::move(gens));
}

uint64_t StabilizerProjector::hash() const {
    uint64_t h = 14695981039346656037ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(uint64_t(n_));
    for (const auto& g : gens_) mix(g.hash());
    return h;
}

StabilizerProjector intersect(const StabilizerProjector& a,
                              const StabilizerProjector& b) {
    if (a.num_qubits() != b.num_qubits())
        throw ContractError("intersect qubit count mismatch");
    int n = a.num_qubits();
    std::vector<std::vector<bool>> abasis, bbasis;
    for (const auto& g : a.generators()) abasis.push_back(pauli_bits(g));
    for (const auto& g : b.generators()) bbasis.push_back(pauli_bits(g));
    std::vector<std::vector<bool>> inter = rowspace_intersection(abasis, bbasis);

    // Signed representatives from a, with the sign-consistency flag chi.
    std::vector<SignedPauli> reps;
    std::vector<bool> chi_bad;
    for (const auto& v : inter) {
        SignedPauli u = pauli_from_bits(v);
        int sa = a.sign_of(u);
        int sb = b.sign_of(u);
        if (sa == 0 || sb == 0)
            throw NumericError("intersection candidate missing from group");
        SignedPauli rep = u;
        rep.set_negative(sa < 0);
        reps.push_back(rep);
        chi_bad.push_back(sa != sb);
    }
    // chi is a homomorphism into {+1,-1}; its kernel is the signed
    // intersection. Fold one bad generator into the others, then drop it.
    int bad = -1;
    for (size_t i = 0; i < reps.size(); ++i)
        if (chi_bad[i]) {
            bad = int(i);
            break;
        }
    std::vector<SignedPauli> keep;
    for (size_t i = 0; i < reps.size(); ++i) {
        if (int(i) == bad) continue;
        if (chi_bad[i])
            keep.push_back(mul_signed(reps[i], reps[bad]));
        else
            keep.push_back(reps[i]);
    }
    return StabilizerProjector::from_generators(n, std::move(keep));
}

ScaledProjector project_zero(const StabilizerProjector& a, int m) {
    if (m < 0 || m > a.num_qubits())
        throw ContractError("project_zero block out of range");
    int n = a.num_qubits();
    double c = 1.0;
    std::vector<SignedPauli> gens = a.generators();
    for (int step = 0; step < m; ++step) {
        int cur_n = n - step;
        // Clear X on the leading qubit; each anti-commuting pair costs 1/2.
        int xi = -1;
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].x(1)) {
                xi = int(i);
                break;
            }
        if (xi >= 0) {
            for (size_t i = 0; i < gens.size(); ++i)
                if (int(i) != xi && gens[i].x(1))
                    gens[i] = mul_signed(gens[i], gens[size_t(xi)]);
            gens.erase(gens.begin() + xi);
            c *= 0.5;
        }
        // <0|Z|0> = +1, so Z components drop with unchanged sign.
        std::vector<SignedPauli> next;
        next.reserve(gens.size());
        for (const auto& g : gens) next.push_back(g.drop_leading(1));
        if (reduce_rows(cur_n - 1, next) == ReduceStatus::MinusIdentity)
            return {0.0, StabilizerProjector::identity(n - m)};
        gens = std::move(next);
    }
    StabilizerProjector b = StabilizerProjector::from_generators(n - m, gens);
    return {c, b};
}

ScaledProjector partial_trace_stab(const StabilizerProjector& a, int m) {
    if (m < 0 || m > a.num_qubits())
        throw ContractError("partial_trace block out of range");
    int n = a.num_qubits();
    std::vector<SignedPauli> gens = a.generators();
    // Echelonize the projections onto the leading m qubits; rows left with a
    // trivial projection generate the subgroup G' that survives the trace.
    auto lead_bit = [m](const SignedPauli& p, int col) {
        return col < m ? p.x(col + 1) : p.z(col - m + 1);
    };
    size_t r = 0;
    for (int col = 0; col < 2 * m && r < gens.size(); ++col) {
        size_t pivot = r;
        while (pivot < gens.size() && !lead_bit(gens[pivot], col)) ++pivot;
        if (pivot == gens.size()) continue;
        std::swap(gens[r], gens[pivot]);
        for (size_t i = r + 1; i < gens.size(); ++i)
            if (lead_bit(gens[i], col)) gens[i] = mul_signed(gens[i], gens[r]);
        ++r;
    }
    std::vector<SignedPauli> kept;
    for (size_t i = r; i < gens.size(); ++i) kept.push_back(gens[i].drop_leading(m));
    double c = std::ldexp(1.0, m - int(r));
    StabilizerProjector b = StabilizerProjector::from_generators(n - m, kept);
    return {c, b};
}

}  // namespace qatpg
