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

#include "qatpg/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace qatpg {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap_angle(double t) {
    while (t > kPi) t -= 2 * kPi;
    while (t <= -kPi) t += 2 * kPi;
    return t;
}
}  // namespace

Gate Gate::rz(int q, double theta) {
    Gate g;
    g.kind = GateKind::Rotation;
    g.wires = {q};
    g.rot_pauli = SignedPauli::single(1, 1, 'Z');
    g.theta = wrap_angle(theta);
    return g;
}

Gate Gate::rot(const SignedPauli& local, const std::vector<int>& wires,
               double theta) {
    if (local.num_qubits() != int(wires.size()))
        throw ContractError("rotation pauli size does not match wire list");
    if (local.is_identity_bits())
        throw ContractError("rotation pauli must not be identity");
    Gate g;
    g.kind = GateKind::Rotation;
    g.wires = wires;
    g.rot_pauli = local;
    g.theta = wrap_angle(theta);
    return g;
}

bool Gate::is_clifford() const {
    if (kind != GateKind::Rotation) return true;
    double r = std::remainder(theta, kPi / 2);
    return std::abs(r) < 1e-12;
}

bool Gate::operator==(const Gate& o) const {
    if (kind != o.kind || wires != o.wires) return false;
    if (kind != GateKind::Rotation) return true;
    return rot_pauli == o.rot_pauli && std::abs(theta - o.theta) < 1e-12;
}

int Circuit::depth() const {
    std::vector<int> avail(n + 1, 0);
    int d = 0;
    for (const Gate& g : gates) {
        int t = 0;
        for (int w : g.wires) t = std::max(t, avail[w]);
        ++t;
        for (int w : g.wires) avail[w] = t;
        d = std::max(d, t);
    }
    return d;
}

int Circuit::non_clifford() const {
    int c = 0;
    for (const Gate& g : gates)
        if (!g.is_clifford()) ++c;
    return c;
}

Circuit Circuit::inverse() const {
    Circuit inv;
    inv.n = n;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::S)
            g.kind = GateKind::Sdg;
        else if (g.kind == GateKind::Sdg)
            g.kind = GateKind::S;
        else if (g.kind == GateKind::Rotation)
            g.theta = wrap_angle(-g.theta);
        inv.gates.push_back(std::move(g));
    }
    return inv;
}

Circuit Circuit::slice(int i, int j) const {
    Circuit out;
    out.n = n;
    if (i > j) return out;
    if (i < 1 || j > size()) throw ContractError("circuit slice out of range");
    out.gates.assign(gates.begin() + (i - 1), gates.begin() + j);
    return out;
}

Circuit inject_fault(const Circuit& c, int site, const FaultModel& fm) {
    if (site < 1 || site > c.size()) throw ContractError("fault site out of range");
    Circuit out;
    out.n = c.n;
    for (int i = 1; i <= c.size(); ++i) {
        if (i != site) {
            out.gates.push_back(c.gates[i - 1]);
            continue;
        }
        if (fm.kind == FaultKind::MissingGate) continue;
        const Gate& fg = c.gates[i - 1];
        for (Gate g : fm.replacement) {
            for (int& w : g.wires) {
                if (w < 1 || w > fg.arity())
                    throw ContractError("replacement wire outside fault gate");
                w = fg.wires[w - 1];
            }
            out.gates.push_back(std::move(g));
        }
    }
    return out;
}

Circuit qft_circuit(int n) {
    if (n < 1) throw ContractError("qft needs n >= 1");
    Circuit c;
    c.n = n;
    for (int q = 1; q <= n; ++q) {
        c.gates.push_back(Gate::h(q));
        for (int j = q + 1; j <= n; ++j) {
            // Controlled phase of angle pi/2^(j-q) as Rz/CNOT/Rz/CNOT with
            // the half-angle pre-rotations on both wires.
            double half = kPi / double(1 << (j - q + 1));
            c.gates.push_back(Gate::rz(q, half));
            c.gates.push_back(Gate::rz(j, half));
            c.gates.push_back(Gate::cnot(q, j));
            c.gates.push_back(Gate::rz(j, -half));
            c.gates.push_back(Gate::cnot(q, j));
        }
    }
    return c;
}

Circuit bv_circuit(int n, const std::vector<bool>& secret) {
    if (int(secret.size()) != n - 1)
        throw ContractError("bv secret must have n-1 bits");
    Circuit c;
    c.n = n;
    int anc = n;
    for (int q = 1; q < n; ++q) c.gates.push_back(Gate::h(q));
    c.gates.push_back(Gate::x(anc));
    c.gates.push_back(Gate::h(anc));
    for (int q = 1; q < n; ++q)
        if (secret[q - 1]) c.gates.push_back(Gate::cnot(q, anc));
    for (int q = 1; q < n; ++q) c.gates.push_back(Gate::h(q));
    return c;
}

Circuit random_circuit(int n, int gate_count, uint64_t seed,
                       double rotation_density) {
    if (n < 2) throw ContractError("random circuit needs n >= 2");
    std::mt19937_64 rng(seed);
    auto pick = [&rng](int lo, int hi) {
        return lo + int(rng() % uint64_t(hi - lo + 1));
    };
    Circuit c;
    c.n = n;
    for (int i = 0; i < gate_count; ++i) {
        double u = double(rng() >> 11) * 0x1p-53;
        if (u < rotation_density) {
            int q = pick(1, n);
            double theta = (double(rng() >> 11) * 0x1p-53) * 2 * kPi - kPi;
            if (std::abs(std::remainder(theta, kPi / 2)) < 1e-3)
                theta += 0.1;  // keep it non-Clifford
            c.gates.push_back(Gate::rz(q, theta));
        } else {
            switch (pick(0, 3)) {
                case 0: c.gates.push_back(Gate::h(pick(1, n))); break;
                case 1: c.gates.push_back(Gate::s(pick(1, n))); break;
                case 2: c.gates.push_back(Gate::x(pick(1, n))); break;
                default: {
                    int a = pick(1, n), b = pick(1, n - 1);
                    if (b >= a) ++b;
                    c.gates.push_back(Gate::cnot(a, b));
                }
            }
        }
    }
    return c;
}

std::string serialize_circuit(const Circuit& c) {
    std::ostringstream os;
    os << "qubits " << c.n << "\n";
    os.precision(17);
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: os << "h " << g.wires[0]; break;
            case GateKind::S: os << "s " << g.wires[0]; break;
            case GateKind::Sdg: os << "sdg " << g.wires[0]; break;
            case GateKind::X: os << "x " << g.wires[0]; break;
            case GateKind::Y: os << "y " << g.wires[0]; break;
            case GateKind::Z: os << "z " << g.wires[0]; break;
            case GateKind::Cnot: os << "cnot " << g.wires[0] << " " << g.wires[1]; break;
            case GateKind::Swap: os << "swap " << g.wires[0] << " " << g.wires[1]; break;
            case GateKind::Rotation: {
                bool plain_rz = g.arity() == 1 && !g.rot_pauli.negative() &&
                                !g.rot_pauli.x(1) && g.rot_pauli.z(1);
                if (plain_rz) {
                    os << "rz " << g.wires[0] << " " << g.theta;
                } else {
                    os << "rot " << g.rot_pauli.embedded(c.n, g.wires).str() << " "
                       << g.theta;
                }
                break;
            }
        }
        os << "\n";
    }
    return os.str();
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Circuit c;
    bool have_header = false;
    int line_no = 0;
    auto fail = [&](const std::string& msg, size_t col) -> ContractError {
        std::ostringstream os;
        os << "circuit parse error at line " << line_no << ", column " << (col + 1)
           << ": " << msg;
        return ContractError(os.str());
    };
    while (std::getline(is, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;
        if (!have_header) {
            if (op != "qubits") throw fail("expected 'qubits N' header", 0);
            if (!(ls >> c.n) || c.n < 1) throw fail("bad qubit count", 7);
            have_header = true;
            continue;
        }
        auto read_wire = [&]() {
            int w;
            if (!(ls >> w) || w < 1 || w > c.n)
                throw fail("bad wire index", line.find(op) + op.size());
            return w;
        };
        if (op == "h") c.gates.push_back(Gate::h(read_wire()));
        else if (op == "s") c.gates.push_back(Gate::s(read_wire()));
        else if (op == "sdg") c.gates.push_back(Gate::sdg(read_wire()));
        else if (op == "x") c.gates.push_back(Gate::x(read_wire()));
        else if (op == "y") c.gates.push_back(Gate::y(read_wire()));
        else if (op == "z") c.gates.push_back(Gate::z(read_wire()));
        else if (op == "cnot") {
            int a = read_wire(), b = read_wire();
            if (a == b) throw fail("cnot wires must differ", 5);
            c.gates.push_back(Gate::cnot(a, b));
        } else if (op == "swap") {
            int a = read_wire(), b = read_wire();
            if (a == b) throw fail("swap wires must differ", 5);
            c.gates.push_back(Gate::swap(a, b));
        } else if (op == "rz") {
            int q = read_wire();
            double theta;
            if (!(ls >> theta)) throw fail("bad rz angle", 3);
            c.gates.push_back(Gate::rz(q, theta));
        } else if (op == "rot") {
            std::string ptext;
            double theta;
            if (!(ls >> ptext >> theta)) throw fail("bad rot line", 4);
            SignedPauli p = SignedPauli::parse(ptext, c.n);
            std::vector<int> wires = p.support();
            if (wires.empty()) throw fail("rot pauli must not be identity", 4);
            SignedPauli local = p.restricted(wires);
            local.set_negative(p.negative());
            c.gates.push_back(Gate::rot(local, wires, theta));
        } else {
            throw fail("unknown gate '" + op + "'", line.find(op));
        }
        std::string rest;
        if (ls >> rest) throw fail("trailing tokens", line.size());
    }
    if (!have_header) throw ContractError("circuit parse error: missing header");
    return c;
}

std::string circuit_hash(const Circuit& c) {
    std::string text = serialize_circuit(c);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace qatpg
