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

#include "qatpg/tableau.hpp"

#include <algorithm>
#include <cmath>

#include "qatpg/gf2.hpp"

namespace qatpg {

namespace {
constexpr double kPi = 3.14159265358979323846;

int rotation_quarter(double theta) {
    // theta as a multiple of pi/2 in {-1, 0, 1, 2}; gate angles are wrapped
    // to (-pi, pi].
    int q = int(std::lround(theta / (kPi / 2)));
    if (std::abs(theta - q * (kPi / 2)) > 1e-9)
        throw ContractError("rotation angle is not Clifford");
    if (q == -2) q = 2;
    return q;
}
}  // namespace

CliffordTableau CliffordTableau::identity(int n) {
    CliffordTableau t;
    t.n_ = n;
    t.ximg_.reserve(n);
    t.zimg_.reserve(n);
    for (int q = 1; q <= n; ++q) {
        t.ximg_.push_back(SignedPauli::single(n, q, 'X'));
        t.zimg_.push_back(SignedPauli::single(n, q, 'Z'));
    }
    return t;
}

CliffordTableau CliffordTableau::from_images(std::vector<SignedPauli> x_images,
                                             std::vector<SignedPauli> z_images) {
    CliffordTableau t;
    t.n_ = int(x_images.size());
    t.ximg_ = std::move(x_images);
    t.zimg_ = std::move(z_images);
    if (!t.is_valid()) throw ContractError("invalid tableau images");
    return t;
}

bool CliffordTableau::is_valid() const {
    if (int(ximg_.size()) != n_ || int(zimg_.size()) != n_) return false;
    std::vector<SignedPauli> all;
    for (const auto& p : ximg_) all.push_back(p);
    for (const auto& p : zimg_) all.push_back(p);
    for (const auto& p : all)
        if (p.num_qubits() != n_) return false;
    if (!independent(all)) return false;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) {
            if (ximg_[i - 1].commutes_with(zimg_[j - 1]) != (i != j)) return false;
            if (!ximg_[i - 1].commutes_with(ximg_[j - 1])) return false;
            if (!zimg_[i - 1].commutes_with(zimg_[j - 1])) return false;
        }
    return true;
}

void CliffordTableau::apply_gate(const Gate& g) {
    for (auto& p : ximg_) conj_by_gate(p, g);
    for (auto& p : zimg_) conj_by_gate(p, g);
}

CliffordTableau CliffordTableau::for_gate(const Gate& g, int n) {
    CliffordTableau t = identity(n);
    t.apply_gate(g);
    return t;
}

CliffordTableau CliffordTableau::from_circuit(const Circuit& c) {
    CliffordTableau t = identity(c.n);
    for (const Gate& g : c.gates) t.apply_gate(g);
    return t;
}

SignedPauli CliffordTableau::conjugate(const SignedPauli& p) const {
    if (p.num_qubits() != n_) throw ContractError("tableau qubit count mismatch");
    // p = sign * i^{#Y} * prod_q X_q^{x} Z_q^{z}; conjugation is
    // multiplicative, so push each factor through and re-fold the phase.
    int phase = 0;  // exponent of i
    SignedPauli acc = SignedPauli::identity(n_);
    for (int q = 1; q <= n_; ++q) {
        if (p.x(q)) {
            PauliProduct pr = pauli_mul(acc, ximg_[q - 1]);
            phase = (phase + pr.phase_exp) & 3;
            acc = pr.op;
        }
        if (p.z(q)) {
            PauliProduct pr = pauli_mul(acc, zimg_[q - 1]);
            phase = (phase + pr.phase_exp) & 3;
            acc = pr.op;
        }
        if (p.x(q) && p.z(q)) phase = (phase + 1) & 3;  // Y = i X Z
    }
    if (phase & 1) throw NumericError("tableau conjugation produced phase i");
    acc.set_negative((phase == 2) != p.negative());
    return acc;
}

StabilizerProjector CliffordTableau::conjugate(const StabilizerProjector& s) const {
    std::vector<SignedPauli> gens;
    gens.reserve(s.num_generators());
    for (const auto& g : s.generators()) gens.push_back(conjugate(g));
    return StabilizerProjector::from_generators(n_, std::move(gens));
}

CliffordTableau CliffordTableau::then(const CliffordTableau& after) const {
    if (after.n_ != n_) throw ContractError("tableau qubit count mismatch");
    CliffordTableau t;
    t.n_ = n_;
    for (int q = 1; q <= n_; ++q) {
        t.ximg_.push_back(after.conjugate(ximg_[q - 1]));
        t.zimg_.push_back(after.conjugate(zimg_[q - 1]));
    }
    return t;
}

CliffordTableau CliffordTableau::inverse() const {
    // Invert the 2n x 2n GF(2) matrix of image bit vectors, then fix signs
    // by conjugating the unsigned preimages through the original map.
    int m = 2 * n_;
    BitMatrix aug(m, 2 * m);
    for (int t = 0; t < m; ++t) {
        const SignedPauli& img = t < n_ ? ximg_[t] : zimg_[t - n_];
        std::vector<bool> bits = pauli_bits(img);
        for (int r = 0; r < m; ++r) aug.set(r, t, bits[r]);
        aug.set(t, m + t, true);
    }
    aug.rref();
    CliffordTableau inv;
    inv.n_ = n_;
    inv.ximg_.resize(n_);
    inv.zimg_.resize(n_);
    for (int t = 0; t < m; ++t) {
        std::vector<bool> pre(m);
        for (int r = 0; r < m; ++r) pre[r] = aug.get(r, m + t);
        SignedPauli p = pauli_from_bits(pre);
        SignedPauli round = conjugate(p);
        if (round.negative()) p.flip_sign();
        if (t < n_)
            inv.ximg_[t] = p;
        else
            inv.zimg_[t - n_] = p;
    }
    return inv;
}

void conj_by_gate(SignedPauli& p, const Gate& g, bool dagger) {
    switch (g.kind) {
        case GateKind::H: p.conj_h(g.wires[0]); return;
        case GateKind::S:
            dagger ? p.conj_sdg(g.wires[0]) : p.conj_s(g.wires[0]);
            return;
        case GateKind::Sdg:
            dagger ? p.conj_s(g.wires[0]) : p.conj_sdg(g.wires[0]);
            return;
        case GateKind::X: p.conj_x(g.wires[0]); return;
        case GateKind::Y: p.conj_y(g.wires[0]); return;
        case GateKind::Z: p.conj_z(g.wires[0]); return;
        case GateKind::Cnot: p.conj_cnot(g.wires[0], g.wires[1]); return;
        case GateKind::Swap: p.conj_swap(g.wires[0], g.wires[1]); return;
        case GateKind::Rotation: {
            std::vector<Gate> seq = as_elementary_cliffords(g);
            if (dagger) {
                for (auto it = seq.rbegin(); it != seq.rend(); ++it)
                    conj_by_gate(p, *it, true);
            } else {
                for (const Gate& e : seq) conj_by_gate(p, e, false);
            }
            return;
        }
    }
}

std::vector<Gate> as_elementary_cliffords(const Gate& g) {
    if (g.kind != GateKind::Rotation) return {g};
    double theta = g.theta;
    SignedPauli p = g.rot_pauli;
    if (p.negative()) {
        theta = -theta;
        p.set_negative(false);
    }
    int quarter = rotation_quarter(theta);
    std::vector<Gate> out;
    if (quarter == 0) return out;
    auto wire = [&](int local) { return g.wires[local - 1]; };
    if (quarter == 2) {
        // e^{-i pi/2 P} = -iP: conjugation by the Pauli itself.
        for (int q = 1; q <= p.num_qubits(); ++q) {
            if (p.x(q) && p.z(q)) out.push_back(Gate::y(wire(q)));
            else if (p.x(q)) out.push_back(Gate::x(wire(q)));
            else if (p.z(q)) out.push_back(Gate::z(wire(q)));
        }
        return out;
    }
    // quarter = +/-1: sqrt-of-Pauli rotation. Change basis so P becomes a
    // Z product, fold the product onto its first wire, apply S or Sdg.
    std::vector<int> sup = p.support();
    std::vector<Gate> pre;
    for (int q : sup) {
        if (p.x(q) && p.z(q)) {
            pre.push_back(Gate::sdg(wire(q)));
            pre.push_back(Gate::h(wire(q)));
        } else if (p.x(q)) {
            pre.push_back(Gate::h(wire(q)));
        }
    }
    std::vector<Gate> ladder;
    for (size_t i = 1; i < sup.size(); ++i)
        ladder.push_back(Gate::cnot(wire(sup[i]), wire(sup[0])));
    out = pre;
    out.insert(out.end(), ladder.begin(), ladder.end());
    out.push_back(quarter == 1 ? Gate::s(wire(sup[0])) : Gate::sdg(wire(sup[0])));
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) out.push_back(*it);
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        Gate inv = *it;
        if (inv.kind == GateKind::S) inv.kind = GateKind::Sdg;
        else if (inv.kind == GateKind::Sdg) inv.kind = GateKind::S;
        out.push_back(inv);
    }
    return out;
}

namespace {

// Mirrored symplectic Gram-Schmidt over the unsigned bit vectors. All index
// decisions are driven by the source-side pattern, which matches the image
// side by precondition.
struct FramePlan {
    std::vector<std::pair<std::vector<bool>, std::vector<bool>>> pairs;
    std::vector<std::vector<bool>> isotropic;
};

FramePlan symplectic_gs(std::vector<std::vector<bool>> vecs) {
    FramePlan plan;
    while (true) {
        int ai = -1, bi = -1;
        for (size_t i = 0; i < vecs.size() && ai < 0; ++i)
            for (size_t j = i + 1; j < vecs.size(); ++j)
                if (symplectic_dot(vecs[i], vecs[j])) {
                    ai = int(i);
                    bi = int(j);
                    break;
                }
        if (ai < 0) break;
        std::vector<bool> a = vecs[ai], b = vecs[bi];
        vecs.erase(vecs.begin() + bi);
        vecs.erase(vecs.begin() + ai);
        for (auto& w : vecs) {
            bool wa = symplectic_dot(w, a), wb = symplectic_dot(w, b);
            if (wb)
                for (size_t c = 0; c < w.size(); ++c) w[c] = w[c] ^ a[c];
            if (wa)
                for (size_t c = 0; c < w.size(); ++c) w[c] = w[c] ^ b[c];
        }
        plan.pairs.emplace_back(std::move(a), std::move(b));
    }
    plan.isotropic = std::move(vecs);
    return plan;
}

// Constraint row for "symplectic product with v": the dual vector with
// halves swapped.
std::vector<bool> symplectic_dual(const std::vector<bool>& v) {
    size_t n = v.size() / 2;
    std::vector<bool> d(v.size());
    for (size_t i = 0; i < n; ++i) {
        d[i] = v[n + i];
        d[n + i] = v[i];
    }
    return d;
}

// Completes a GS frame plan to a full symplectic basis: x_slot/z_slot vectors
// for every qubit slot.
void complete_frame(int n, const FramePlan& plan, std::vector<std::vector<bool>>& xs,
                    std::vector<std::vector<bool>>& zs) {
    xs.assign(n, {});
    zs.assign(n, {});
    std::vector<std::vector<bool>> known;
    int slot = 0;
    for (const auto& pr : plan.pairs) {
        xs[slot] = pr.first;
        zs[slot] = pr.second;
        known.push_back(pr.first);
        known.push_back(pr.second);
        ++slot;
    }
    int iso_base = slot;
    for (const auto& c : plan.isotropic) {
        zs[slot] = c;
        known.push_back(c);
        ++slot;
    }
    auto solve_products = [&](const std::vector<bool>& want) {
        BitMatrix m(int(known.size()), 2 * n);
        for (size_t r = 0; r < known.size(); ++r) {
            std::vector<bool> d = symplectic_dual(known[r]);
            for (int cx = 0; cx < 2 * n; ++cx) m.set(int(r), cx, d[cx]);
        }
        auto sol = BitMatrix::solve(m, want);
        if (!sol) throw NumericError("frame completion system unsolvable");
        return *sol;
    };
    // Partners for the isotropic vectors.
    for (size_t i = 0; i < plan.isotropic.size(); ++i) {
        std::vector<bool> want(known.size(), false);
        // anti-commute exactly with its own z, commute with the rest
        want[2 * plan.pairs.size() + i] = true;
        std::vector<bool> x = solve_products(want);
        xs[iso_base + int(i)] = x;
        known.push_back(x);
    }
    // Fresh hyperbolic pairs for the remaining slots.
    for (; slot < n; ++slot) {
        // A vector symplectically orthogonal to everything known is
        // independent of the known span (it is now non-degenerate).
        // Find a nonzero kernel vector: RREF, take a free column.
        BitMatrix red(int(known.size()), 2 * n);
        for (size_t r = 0; r < known.size(); ++r) {
            std::vector<bool> d = symplectic_dual(known[r]);
            for (int cx = 0; cx < 2 * n; ++cx) red.set(int(r), cx, d[cx]);
        }
        std::vector<int> pivots = red.rref();
        std::vector<bool> is_pivot(2 * n, false);
        for (int pc : pivots) is_pivot[pc] = true;
        int free_col = -1;
        for (int cx = 0; cx < 2 * n && free_col < 0; ++cx)
            if (!is_pivot[cx]) free_col = cx;
        if (free_col < 0) throw NumericError("no free column during completion");
        std::vector<bool> e(2 * n, false);
        e[free_col] = true;
        for (size_t r = 0; r < pivots.size(); ++r)
            if (red.get(int(r), free_col)) e[pivots[r]] = true;
        xs[slot] = e;
        known.push_back(e);
        // Partner: anti-commutes with e only.
        std::vector<bool> want(known.size(), false);
        want[known.size() - 1] = true;
        std::vector<bool> f = solve_products(want);
        zs[slot] = f;
        known.push_back(f);
    }
}

CliffordTableau frame_tableau(int n, const std::vector<std::vector<bool>>& xs,
                              const std::vector<std::vector<bool>>& zs) {
    std::vector<SignedPauli> xi, zi;
    for (int i = 0; i < n; ++i) {
        xi.push_back(pauli_from_bits(xs[i]));
        zi.push_back(pauli_from_bits(zs[i]));
    }
    return CliffordTableau::from_images(std::move(xi), std::move(zi));
}

}  // namespace

CliffordTableau CliffordTableau::from_pauli_map(
    const std::vector<std::pair<SignedPauli, SignedPauli>>& pairs, int n) {
    std::vector<SignedPauli> src, img;
    for (const auto& [p, q] : pairs) {
        if (p.num_qubits() != n || q.num_qubits() != n)
            throw ContractError("pauli map qubit count mismatch");
        src.push_back(p);
        img.push_back(q);
    }
    if (!independent(src)) throw ContractError("pauli map sources dependent");
    if (!independent(img)) throw ContractError("pauli map images dependent");
    for (size_t i = 0; i < src.size(); ++i)
        for (size_t j = i + 1; j < src.size(); ++j)
            if (src[i].commutes_with(src[j]) != img[i].commutes_with(img[j]))
                throw ContractError("pauli map commutation patterns differ");

    // Mirrored Gram-Schmidt: replay the source-side combination steps on the
    // image side by construction (patterns coincide throughout).
    std::vector<std::vector<bool>> sv, iv;
    for (const auto& p : src) sv.push_back(pauli_bits(p));
    for (const auto& q : img) iv.push_back(pauli_bits(q));
    FramePlan ps = symplectic_gs(sv);
    FramePlan pi = symplectic_gs(iv);

    std::vector<std::vector<bool>> sx, sz, ix, iz;
    complete_frame(n, ps, sx, sz);
    complete_frame(n, pi, ix, iz);
    CliffordTableau ts = frame_tableau(n, sx, sz);
    CliffordTableau ti = frame_tableau(n, ix, iz);
    CliffordTableau u = ts.inverse().then(ti);

    // Fix signs with a Pauli correction W: flip exactly the mismatched
    // images; solvable because the images are independent.
    std::vector<bool> bad(src.size(), false);
    bool any = false;
    for (size_t i = 0; i < src.size(); ++i) {
        SignedPauli r = u.conjugate(src[i]);
        SignedPauli want = img[i];
        if (pauli_bits(r) != pauli_bits(want))
            throw NumericError("pauli map image bits mismatch");
        bad[i] = r.negative() != want.negative();
        any = any || bad[i];
    }
    if (any) {
        BitMatrix m(int(src.size()), 2 * n);
        for (size_t i = 0; i < src.size(); ++i) {
            std::vector<bool> d = symplectic_dual(pauli_bits(img[i]));
            for (int c = 0; c < 2 * n; ++c) m.set(int(i), c, d[c]);
        }
        auto w = BitMatrix::solve(m, bad);
        if (!w) throw NumericError("sign correction system unsolvable");
        SignedPauli corr = pauli_from_bits(*w);
        for (int q = 1; q <= n; ++q) {
            if (!u.ximg_[q - 1].commutes_with(corr)) u.ximg_[q - 1].flip_sign();
            if (!u.zimg_[q - 1].commutes_with(corr)) u.zimg_[q - 1].flip_sign();
        }
    }
    return u;
}

Circuit tableau_to_circuit(const CliffordTableau& t) {
    int n = t.num_qubits();
    CliffordTableau w = t;
    std::vector<Gate> applied;
    auto apply = [&](Gate g) {
        w.apply_gate(g);
        applied.push_back(std::move(g));
    };
    for (int j = 1; j <= n; ++j) {
        // Normalize the image of X_j to +X_j.
        {
            const SignedPauli* px = &w.x_image(j);
            int q = 0;
            for (int k = j; k <= n && !q; ++k)
                if (px->x(k)) q = k;
            if (!q) {
                int k = j;
                while (!px->z(k)) ++k;
                apply(Gate::h(k));
                q = k;
            }
            if (q != j) apply(Gate::swap(j, q));
            if (w.x_image(j).z(j)) apply(Gate::s(j));
            for (int k = j + 1; k <= n; ++k) {
                const SignedPauli& p = w.x_image(j);
                if (p.z(k)) apply(p.x(k) ? Gate::s(k) : Gate::h(k));
                if (w.x_image(j).x(k)) apply(Gate::cnot(j, k));
            }
        }
        // Normalize the image of Z_j to +Z_j without disturbing X_j.
        {
            for (int k = j + 1; k <= n; ++k) {
                const SignedPauli& p = w.z_image(j);
                if (p.x(k)) {
                    if (p.z(k)) apply(Gate::s(k));
                    apply(Gate::h(k));
                }
                if (w.z_image(j).z(k)) apply(Gate::cnot(k, j));
            }
            if (w.z_image(j).x(j)) {
                // HSH maps X -> X and Y -> Z.
                apply(Gate::h(j));
                apply(Gate::s(j));
                apply(Gate::h(j));
            }
            if (w.x_image(j).negative()) apply(Gate::z(j));
            if (w.z_image(j).negative()) apply(Gate::x(j));
        }
    }
    if (!(w == CliffordTableau::identity(n)))
        throw NumericError("tableau synthesis did not reach identity");
    // applied_k o ... o applied_1 o T = I, so T's circuit is the reversed
    // inverses.
    Circuit out;
    out.n = n;
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::S) g.kind = GateKind::Sdg;
        else if (g.kind == GateKind::Sdg) g.kind = GateKind::S;
        out.gates.push_back(std::move(g));
    }
    return out;
}

Circuit projector_prep_circuit(const StabilizerProjector& a) {
    int n = a.num_qubits();
    std::vector<std::pair<SignedPauli, SignedPauli>> pairs;
    const auto& gens = a.generators();
    for (size_t i = 0; i < gens.size(); ++i)
        pairs.emplace_back(SignedPauli::single(n, int(i) + 1, 'Z'), gens[i]);
    CliffordTableau u = CliffordTableau::from_pauli_map(pairs, n);
    return tableau_to_circuit(u);
}

TableauSim::TableauSim(int n) : n_(n) {
    destab_.reserve(n);
    stab_.reserve(n);
    for (int q = 1; q <= n; ++q) {
        destab_.push_back(SignedPauli::single(n, q, 'X'));
        stab_.push_back(SignedPauli::single(n, q, 'Z'));
    }
}

void TableauSim::apply_elementary(const Gate& g) {
    for (auto& r : destab_) conj_by_gate(r, g);
    for (auto& r : stab_) conj_by_gate(r, g);
}

void TableauSim::apply(const Gate& g) {
    if (!g.is_clifford()) throw ContractError("non-Clifford gate in tableau sim");
    for (const Gate& e : as_elementary_cliffords(g)) apply_elementary(e);
}

void TableauSim::apply_circuit(const Circuit& c) {
    if (c.n != n_) throw ContractError("circuit size mismatch");
    for (const Gate& g : c.gates) apply(g);
}

bool TableauSim::measure(int q, std::mt19937_64& rng) {
    int p = -1;
    for (int i = 0; i < n_; ++i)
        if (stab_[i].x(q)) {
            p = i;
            break;
        }
    if (p >= 0) {
        bool outcome = (rng() >> 40) & 1;
        for (int i = 0; i < n_; ++i) {
            if (i != p && stab_[i].x(q)) stab_[i] = mul_signed(stab_[i], stab_[p]);
            if (destab_[i].x(q) && i != p) {
                // Destabilizer signs are never observed; track bits only.
                PauliProduct pr = pauli_mul(destab_[i], stab_[p]);
                destab_[i] = pr.op;
            }
        }
        destab_[p] = stab_[p];
        stab_[p] = SignedPauli::single(n_, q, 'Z', outcome);
        return outcome;
    }
    // Deterministic: accumulate stabilizer rows whose destabilizer partner
    // anti-commutes with Z_q.
    SignedPauli acc = SignedPauli::identity(n_);
    for (int i = 0; i < n_; ++i)
        if (destab_[i].x(q)) acc = mul_signed(acc, stab_[i]);
    return acc.negative();
}

std::vector<std::string> clifford_simulate(const Circuit& c, int shots,
                                           std::mt19937_64& rng) {
    std::vector<std::string> out;
    out.reserve(shots);
    for (int s = 0; s < shots; ++s) {
        TableauSim sim(c.n);
        sim.apply_circuit(c);
        std::string bits(c.n, '0');
        for (int q = 1; q <= c.n; ++q)
            if (sim.measure(q, rng)) bits[q - 1] = '1';
        out.push_back(std::move(bits));
    }
    return out;
}

}  // namespace qatpg
