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

#include <random>
#include <utility>
#include <vector>

#include "qatpg/circuit.hpp"
#include "qatpg/stabilizer.hpp"

namespace qatpg {

/// Symplectic map recording the signed images of X_j and Z_j under
/// conjugation. Global phase is never tracked; all semantics are
/// conjugation-level.
class CliffordTableau {
  public:
    static CliffordTableau identity(int n);
    // Validates the symplectic condition and image independence.
    static CliffordTableau from_images(std::vector<SignedPauli> x_images,
                                       std::vector<SignedPauli> z_images);
    // Tableau of a single Clifford gate embedded on n qubits.
    static CliffordTableau for_gate(const Gate& g, int n);
    static CliffordTableau from_circuit(const Circuit& c);

    // Constructive Clifford completion of a partial conjugation map
    // P_i -> Q_i. Requires both sides independent with matching commutation
    // patterns; any valid completion is returned.
    static CliffordTableau from_pauli_map(
        const std::vector<std::pair<SignedPauli, SignedPauli>>& pairs, int n);

    int num_qubits() const { return n_; }
    const SignedPauli& x_image(int q) const { return ximg_[q - 1]; }
    const SignedPauli& z_image(int q) const { return zimg_[q - 1]; }

    SignedPauli conjugate(const SignedPauli& p) const;
    StabilizerProjector conjugate(const StabilizerProjector& s) const;

    // (after o this): first this, then after.
    CliffordTableau then(const CliffordTableau& after) const;
    CliffordTableau inverse() const;

    bool is_valid() const;
    bool operator==(const CliffordTableau& o) const {
        return n_ == o.n_ && ximg_ == o.ximg_ && zimg_ == o.zimg_;
    }

    // Conjugates every image by a gate (left-composition with the gate's
    // conjugation action). Used by synthesis.
    void apply_gate(const Gate& g);

  private:
    CliffordTableau() = default;
    int n_ = 0;
    std::vector<SignedPauli> ximg_, zimg_;
};

// Conjugation of a Pauli by one circuit gate: p -> g p g^dag (or with
// g^dag outside when dagger is set). The gate must be Clifford.
void conj_by_gate(SignedPauli& p, const Gate& g, bool dagger = false);

// Expands a Clifford gate into {H,S,Sdg,X,Y,Z,CNOT,SWAP}. Clifford rotations
// (theta multiple of pi/2) become basis change + CNOT ladder + S/Sdg.
std::vector<Gate> as_elementary_cliffords(const Gate& g);

// Gaussian-elimination synthesis; gate count is O(n^2).
Circuit tableau_to_circuit(const CliffordTableau& t);

// Corollary-style preparation circuit: U_A (|0><0|^(n-k) x I) U_A^dag = A,
// with the identity factor on the trailing rank_log2 qubits.
Circuit projector_prep_circuit(const StabilizerProjector& a);

/// Gottesman-Knill stabilizer simulator (CHP tableau with destabilizers).
class TableauSim {
  public:
    explicit TableauSim(int n);

    int num_qubits() const { return n_; }
    void apply(const Gate& g);  // throws ContractError on non-Clifford gates
    void apply_circuit(const Circuit& c);
    // Computational-basis measurement of one qubit, collapsing the state.
    bool measure(int q, std::mt19937_64& rng);

  private:
    void apply_elementary(const Gate& g);
    int n_;
    std::vector<SignedPauli> destab_, stab_;
};

// Runs the circuit `shots` times, measuring every qubit at the end.
// Outcome strings list qubit 1 first.
std::vector<std::string> clifford_simulate(const Circuit& c, int shots,
                                           std::mt19937_64& rng);

}  // namespace qatpg
