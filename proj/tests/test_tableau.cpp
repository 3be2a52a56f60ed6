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

#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qatpg/dense.hpp"

using namespace qatpg;
using oracles::random_pauli;
using oracles::random_projector;

namespace {
SignedPauli P(const std::string& t, int n) { return SignedPauli::parse(t, n); }

Circuit random_clifford_circuit(int n, int len, std::mt19937_64& rng) {
    Circuit c;
    c.n = n;
    for (int i = 0; i < len; ++i) {
        int q = 1 + int(rng() % n);
        switch (rng() % (n >= 2 ? 4 : 3)) {
            case 0: c.gates.push_back(Gate::h(q)); break;
            case 1: c.gates.push_back(Gate::s(q)); break;
            case 2: c.gates.push_back(Gate::x(q)); break;
            default: {
                int r = 1 + int(rng() % (n - 1));
                if (r >= q) ++r;
                c.gates.push_back(Gate::cnot(q, r));
            }
        }
    }
    return c;
}

CliffordTableau random_tableau(int n, std::mt19937_64& rng) {
    return CliffordTableau::from_circuit(
        random_clifford_circuit(n, 10 + int(rng() % 10), rng));
}

// Dense conjugation oracle: U P U^dag compared entrywise.
void check_conjugation(const CliffordTableau& t, const Circuit& c,
                       const SignedPauli& p) {
    Mat u = circuit_unitary(c);
    Mat want = u * dense_pauli(p) * u.adjoint();
    CHECK(approx_equal(dense_pauli(t.conjugate(p)), want, 1e-9));
}
}  // namespace

TEST_CASE("conjugation by named gates matches the dense oracle") {
    std::mt19937_64 rng(41);
    Circuit h;
    h.n = 1;
    h.gates.push_back(Gate::h(1));
    CliffordTableau th = CliffordTableau::from_circuit(h);
    CHECK(th.conjugate(P("X1", 1)) == P("Z1", 1));
    CHECK(th.conjugate(P("Y1", 1)) == P("-Y1", 1));
    CHECK(th.conjugate(P("Z1", 1)) == P("X1", 1));

    Circuit cx;
    cx.n = 2;
    cx.gates.push_back(Gate::cnot(1, 2));
    CliffordTableau tcx = CliffordTableau::from_circuit(cx);
    CHECK(tcx.conjugate(P("X1", 2)) == P("X1*X2", 2));
    check_conjugation(tcx, cx, P("X1", 2));

    // every elementary gate against the dense oracle on random Paulis
    std::vector<Gate> gates = {Gate::h(1),      Gate::s(1),    Gate::sdg(2),
                               Gate::x(2),      Gate::y(1),    Gate::z(2),
                               Gate::cnot(1, 2), Gate::cnot(2, 1),
                               Gate::swap(1, 2)};
    for (const Gate& g : gates) {
        Circuit c;
        c.n = 2;
        c.gates.push_back(g);
        CliffordTableau t = CliffordTableau::from_circuit(c);
        for (int i = 0; i < 12; ++i) check_conjugation(t, c, random_pauli(2, rng));
    }
}

TEST_CASE("Clifford rotations expand to correct elementary sequences") {
    std::mt19937_64 rng(42);
    const double kPi = 3.14159265358979323846;
    for (double theta : {kPi / 2, -kPi / 2, kPi}) {
        for (int t = 0; t < 12; ++t) {
            int n = 2;
            SignedPauli local = random_pauli(n, rng, false);
            Gate g = Gate::rot(local, {1, 2}, theta);
            REQUIRE(g.is_clifford());
            Circuit c;
            c.n = n;
            c.gates.push_back(g);
            CliffordTableau tab = CliffordTableau::from_circuit(c);
            for (int i = 0; i < 6; ++i) check_conjugation(tab, c, random_pauli(n, rng));
        }
    }
}

TEST_CASE("composition matches dense composition up to global phase") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 12; ++t) {
        int n = 1 + int(rng() % 3);
        Circuit a = random_clifford_circuit(n, 8, rng);
        Circuit b = random_clifford_circuit(n, 8, rng);
        CliffordTableau ta = CliffordTableau::from_circuit(a);
        CliffordTableau tb = CliffordTableau::from_circuit(b);
        CliffordTableau tab = ta.then(tb);  // b after a
        Circuit joined = a;
        joined.gates.insert(joined.gates.end(), b.gates.begin(), b.gates.end());
        CHECK(tab == CliffordTableau::from_circuit(joined));
        // associativity
        Circuit c = random_clifford_circuit(n, 6, rng);
        CliffordTableau tc = CliffordTableau::from_circuit(c);
        CHECK(ta.then(tb).then(tc) == ta.then(tb.then(tc)));
    }
}

TEST_CASE("inverse round-trips") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 12; ++t) {
        int n = 1 + int(rng() % 3);
        CliffordTableau u = random_tableau(n, rng);
        CHECK(u.then(u.inverse()) == CliffordTableau::identity(n));
        CHECK(u.inverse().then(u) == CliffordTableau::identity(n));
    }
}

TEST_CASE("from_pauli_map examples") {
    auto t = CliffordTableau::from_pauli_map(
        {{P("X1", 1), P("Z1", 1)}, {P("Z1", 1), P("X1", 1)}}, 1);
    CHECK(t.conjugate(P("X1", 1)) == P("Z1", 1));
    CHECK(t.conjugate(P("Z1", 1)) == P("X1", 1));

    auto partial = CliffordTableau::from_pauli_map({{P("Z1", 2), P("Z1", 2)}}, 2);
    CHECK(partial.conjugate(P("Z1", 2)) == P("Z1", 2));
    CHECK(partial.is_valid());

    CHECK_THROWS_AS(CliffordTableau::from_pauli_map(
                        {{P("X1", 1), P("Z1", 1)}, {P("Z1", 1), P("Z1", 1)}}, 1),
                    ContractError);
    CHECK_THROWS_AS(CliffordTableau::from_pauli_map(
                        {{P("X1", 2), P("X1", 2)}, {P("Z1", 2), P("X2", 2)}}, 2),
                    ContractError);
}

TEST_CASE("from_pauli_map satisfies its postcondition on random maps") {
    std::mt19937_64 rng(45);
    for (int n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 200; ++rep) {
            // random matching-pattern pairs: both sides are images of a
            // random independent canonical subset under random tableaus
            CliffordTableau v = random_tableau(n, rng);
            CliffordTableau w = random_tableau(n, rng);
            int k = 1 + int(rng() % n);
            std::vector<SignedPauli> canon;
            for (int q = 1; q <= n && int(canon.size()) < k; ++q) {
                switch (rng() % 3) {
                    case 0: canon.push_back(SignedPauli::single(n, q, 'X')); break;
                    case 1: canon.push_back(SignedPauli::single(n, q, 'Z')); break;
                    default: canon.push_back(SignedPauli::single(n, q, 'Y')); break;
                }
            }
            std::vector<std::pair<SignedPauli, SignedPauli>> pairs;
            for (const auto& r : canon) {
                SignedPauli a = v.conjugate(r), b = w.conjugate(r);
                if (rng() & 1) a.flip_sign();
                if (rng() & 1) b.flip_sign();
                pairs.emplace_back(a, b);
            }
            CliffordTableau u = CliffordTableau::from_pauli_map(pairs, n);
            CHECK(u.is_valid());
            for (const auto& [src, img] : pairs) CHECK(u.conjugate(src) == img);
        }
    }
}

TEST_CASE("synthesis round-trips and stays quadratic") {
    std::mt19937_64 rng(46);
    CHECK(tableau_to_circuit(CliffordTableau::identity(3)).size() == 0);

    Circuit hh;
    hh.n = 2;
    hh.gates.push_back(Gate::h(1));
    hh.gates.push_back(Gate::h(2));
    CliffordTableau thh = CliffordTableau::from_circuit(hh);
    Circuit shh = tableau_to_circuit(thh);
    CHECK(CliffordTableau::from_circuit(shh) == thh);

    for (int t = 0; t < 30; ++t) {
        int n = 1 + int(rng() % 4);
        CliffordTableau u = random_tableau(n, rng);
        Circuit c = tableau_to_circuit(u);
        CHECK(CliffordTableau::from_circuit(c) == u);
        CHECK(c.size() <= 6 * n * n + 8);
        // dense conjugation check at small n
        if (n <= 3) {
            for (int i = 0; i < 4; ++i) {
                SignedPauli p = random_pauli(n, rng);
                Mat ud = circuit_unitary(c);
                CHECK(approx_equal(ud * dense_pauli(p) * ud.adjoint(),
                                   dense_pauli(u.conjugate(p)), 1e-9));
            }
        }
    }
}

TEST_CASE("projector_prep_circuit examples") {
    auto zz = StabilizerProjector::from_generators(2, {P("Z1", 2), P("Z2", 2)});
    CHECK(projector_prep_circuit(zz).size() == 0);

    auto mz = StabilizerProjector::from_generators(1, {P("-Z1", 1)});
    Circuit mzc = projector_prep_circuit(mz);
    CHECK(mzc.size() == 1);
    CHECK(mzc.gates[0].kind == GateKind::X);

    auto epr =
        StabilizerProjector::from_generators(2, {P("X1*X2", 2), P("Z1*Z2", 2)});
    Circuit bell = projector_prep_circuit(epr);
    Mat u = circuit_unitary(bell);
    Mat zero2 = Mat::Zero(4, 4);
    zero2(0, 0) = 1;  // rank 2^0: |00><00|
    CHECK(approx_equal(u * zero2 * u.adjoint(), dense_projector(epr), 1e-9));
}

TEST_CASE("projector_prep_circuit round-trips on random projectors") {
    std::mt19937_64 rng(47);
    auto check = [](const StabilizerProjector& s) {
        int n = s.num_qubits();
        Circuit c = projector_prep_circuit(s);
        Mat u = circuit_unitary(c);
        int m = s.rank_log2();
        // |0><0| on the first n-m qubits (low bits), identity on the rest
        Mat init = Mat::Zero(1 << n, 1 << n);
        for (int64_t l = 0; l < (int64_t(1) << m); ++l)
            init(l << (n - m), l << (n - m)) = 1;
        CHECK(approx_equal(u * init * u.adjoint(), dense_projector(s), 1e-9));
    };
    // everything with n <= 2, via random sweep and the explicit examples
    for (int t = 0; t < 120; ++t) check(random_projector(1 + int(rng() % 2), rng));
    for (int t = 0; t < 200; ++t) check(random_projector(3, rng));
}

TEST_CASE("clifford_simulate matches dense Born sampling") {
    std::mt19937_64 rng(48);

    Circuit h;
    h.n = 1;
    h.gates.push_back(Gate::h(1));
    auto outcomes = clifford_simulate(h, 10000, rng);
    int ones = 0;
    for (const auto& o : outcomes) ones += o == "1";
    CHECK(std::abs(ones - 5000) < 165);  // two-sided binomial at p ~ 0.001

    Circuit x;
    x.n = 1;
    x.gates.push_back(Gate::x(1));
    for (const auto& o : clifford_simulate(x, 64, rng)) CHECK(o == "1");

    Circuit bell;
    bell.n = 2;
    bell.gates.push_back(Gate::h(1));
    bell.gates.push_back(Gate::cnot(1, 2));
    for (const auto& o : clifford_simulate(bell, 400, rng))
        CHECK((o == "00" || o == "11"));

    // chi-square agreement with dense probabilities on random circuits
    for (int t = 0; t < 6; ++t) {
        int n = 2 + int(rng() % 3);
        Circuit c = random_circuit(n, 20, rng(), 0.0);
        Vec state = run_statevector(c, basis_state(n, 0));
        std::map<std::string, double> probs;
        for (int64_t i = 0; i < state.size(); ++i) {
            std::string key(n, '0');
            for (int q = 0; q < n; ++q)
                if ((i >> q) & 1) key[q] = '1';
            double p = std::norm(state(i));
            if (p > 1e-15) probs[key] = p;
        }
        const int shots = 10000;
        std::map<std::string, int> counts;
        for (const auto& o : clifford_simulate(c, shots, rng)) counts[o]++;
        CHECK(oracles::chi_square_consistent(counts, probs, shots));
    }

    Circuit bad;
    bad.n = 1;
    bad.gates.push_back(Gate::rz(1, 0.3));
    TableauSim sim(1);
    CHECK_THROWS_AS(sim.apply(bad.gates[0]), ContractError);
}
