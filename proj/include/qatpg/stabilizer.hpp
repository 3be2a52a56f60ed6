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

#include <string>
#include <vector>

#include "qatpg/pauli.hpp"

namespace qatpg {

/// A stabilizer group in canonical generator form, standing for the
/// projector prod_i (I + P_i)/2 onto its joint +1 eigenspace.
///
/// Canonical form: reduced row echelon over GF(2) with column order
/// x_1..x_n then z_1..z_n, signs propagated through the row operations.
/// Two generator sets of the same signed group canonicalize identically,
/// which makes equality and hashing structural.
class StabilizerProjector {
  public:
    // Identity projector (empty group).
    static StabilizerProjector identity(int n);
    // Canonicalizes `gens`. Throws ContractError if generators anti-commute
    // or the group contains -I. Dependent duplicates are dropped.
    static StabilizerProjector from_generators(int n,
                                               std::vector<SignedPauli> gens);
    static StabilizerProjector parse(const std::string& text, int n);

    int num_qubits() const { return n_; }
    int num_generators() const { return int(gens_.size()); }
    const std::vector<SignedPauli>& generators() const { return gens_; }

    int rank_log2() const { return n_ - num_generators(); }
    double trace() const;  // 2^(n-k), as a double (n may exceed 63)

    // Sign the group assigns to the element with the given unsigned bits;
    // 0 if the bits are not in the group.
    int sign_of(const SignedPauli& unsigned_bits) const;
    bool contains(const SignedPauli& p) const;

    // All 2^k signed elements (small groups only).
    std::vector<SignedPauli> elements() const;

    StabilizerProjector conjugated_by_pauli(const SignedPauli& p) const;
    StabilizerProjector embedded(int n_total, const std::vector<int>& wires) const;
    static StabilizerProjector tensor(const StabilizerProjector& a,
                                      const StabilizerProjector& b);

    std::string str() const;  // "<-X3,Z1*Z2>"; identity group is "<>"

    bool operator==(const StabilizerProjector& o) const {
        return n_ == o.n_ && gens_ == o.gens_;
    }
    bool operator!=(const StabilizerProjector& o) const { return !(*this == o); }
    uint64_t hash() const;

  private:
    StabilizerProjector() = default;
    int n_ = 0;
    std::vector<SignedPauli> gens_;
};

struct StabilizerProjectorHash {
    size_t operator()(const StabilizerProjector& s) const {
        return size_t(s.hash());
    }
};

inline StabilizerProjector canonicalize(int n, std::vector<SignedPauli> gens) {
    return StabilizerProjector::from_generators(n, std::move(gens));
}

// Signed group intersection. The unsigned row-space intersection is computed
// first (Zassenhaus); candidates whose signs disagree between the two groups
// are then filtered out. The sign-consistency map is a homomorphism, so the
// result is again a group.
StabilizerProjector intersect(const StabilizerProjector& a,
                              const StabilizerProjector& b);

struct ScaledProjector {
    double c = 0;
    StabilizerProjector proj;
};

// <0|^m A |0>^m on the leading m qubits: returns (c, B) with
// <0..0| A |0..0> = c B and B on n-m qubits. c in {0} U [1/2^m, 1].
ScaledProjector project_zero(const StabilizerProjector& a, int m);

// tr over the leading m qubits: tr_m(A) = c B with 0 <= c <= 2^m.
ScaledProjector partial_trace_stab(const StabilizerProjector& a, int m);

}  // namespace qatpg
