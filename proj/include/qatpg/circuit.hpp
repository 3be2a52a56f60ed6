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

#include "qatpg/pauli.hpp"

namespace qatpg {

enum class GateKind { H, S, Sdg, X, Y, Z, Cnot, Swap, Rotation };

/// One gate. `wires` are 1-based circuit wires, in gate order (control first
/// for CNOT). Rotation gates carry a signed Pauli over the gate's own wires
/// (local qubit p acts on wires[p-1]) and an angle theta in (-pi, pi].
/// Dense convention: rot(P, theta) = e^{i theta/2} (cos(theta/2) I
/// - i sin(theta/2) P), so rz(theta) on Z is exactly diag(1, e^{i theta}).
struct Gate {
    GateKind kind;
    std::vector<int> wires;
    SignedPauli rot_pauli;  // rotations only
    double theta = 0.0;     // rotations only

    static Gate h(int q) { return {GateKind::H, {q}, {}, 0}; }
    static Gate s(int q) { return {GateKind::S, {q}, {}, 0}; }
    static Gate sdg(int q) { return {GateKind::Sdg, {q}, {}, 0}; }
    static Gate x(int q) { return {GateKind::X, {q}, {}, 0}; }
    static Gate y(int q) { return {GateKind::Y, {q}, {}, 0}; }
    static Gate z(int q) { return {GateKind::Z, {q}, {}, 0}; }
    static Gate cnot(int c, int t) { return {GateKind::Cnot, {c, t}, {}, 0}; }
    static Gate swap(int a, int b) { return {GateKind::Swap, {a, b}, {}, 0}; }
    static Gate rz(int q, double theta);
    static Gate rot(const SignedPauli& local, const std::vector<int>& wires,
                    double theta);

    int arity() const { return int(wires.size()); }
    // A rotation is Clifford iff theta is a multiple of pi/2.
    bool is_clifford() const;
    bool operator==(const Gate& o) const;
};

struct Circuit {
    int n = 0;
    std::vector<Gate> gates;

    int size() const { return int(gates.size()); }
    int depth() const;          // ASAP schedule depth
    int non_clifford() const;   // gates failing Gate::is_clifford
    Circuit inverse() const;
    Circuit slice(int i, int j) const;  // 1-based inclusive; i > j is empty
};

enum class FaultKind { MissingGate, ReplacedBy };

/// A fault at one gate site. ReplacedBy carries a gate sequence over the
/// fault gate's own wires (local indices 1..arity).
struct FaultModel {
    FaultKind kind = FaultKind::MissingGate;
    std::vector<Gate> replacement;

    static FaultModel missing() { return {FaultKind::MissingGate, {}}; }
    static FaultModel replaced_by(std::vector<Gate> local_gates) {
        return {FaultKind::ReplacedBy, std::move(local_gates)};
    }
};

// site is 1-based.
Circuit inject_fault(const Circuit& c, int site, const FaultModel& fm);

// Benchmark generators. Gate counts reproduce the reference figures:
// QFT_n has size n + 5n(n-1)/2, depth 8n-10 (n >= 2), 3n(n-1)/2 rotations.
Circuit qft_circuit(int n);
// BV over n wires: n-1 data wires plus one ancilla; |secret| = n-1.
Circuit bv_circuit(int n, const std::vector<bool>& secret);
Circuit random_circuit(int n, int gate_count, uint64_t seed,
                       double rotation_density = 0.3);

Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

// FNV-1a over the serialized text, as a hex string.
std::string circuit_hash(const Circuit& c);

}  // namespace qatpg
