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

#include "qatpg/dense.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qatpg/tableau.hpp"

using namespace qatpg;

TEST_CASE("dense_pauli agrees with the Kronecker oracle") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + int(rng() % 3);
        SignedPauli p = oracles::random_pauli(n, rng);
        CHECK(approx_equal(dense_pauli(p), oracles::kron_pauli(p), 1e-12));
    }
}

TEST_CASE("circuit_unitary basics") {
    Circuit empty;
    empty.n = 2;
    CHECK(approx_equal(circuit_unitary(empty), Mat::Identity(4, 4), 1e-12));

    Circuit h;
    h.n = 1;
    h.gates.push_back(Gate::h(1));
    Mat hm(2, 2);
    double s = 1 / std::sqrt(2.0);
    hm << s, s, s, -s;
    CHECK(approx_equal(circuit_unitary(h), hm, 1e-12));

    Circuit cx;
    cx.n = 2;
    cx.gates.push_back(Gate::cnot(1, 2));
    Mat want = Mat::Zero(4, 4);
    // |x1 x2>: control x1 (low bit) flips x2
    want(0, 0) = 1;
    want(3, 1) = 1;
    want(2, 2) = 1;
    want(1, 3) = 1;
    CHECK(approx_equal(circuit_unitary(cx), want, 1e-12));
}

TEST_CASE("gate embedding matches explicit matrix embedding") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + int(rng() % 2);
        Circuit c = random_circuit(n, 6, rng());
        Mat via_cols = circuit_unitary(c);
        Mat via_embed = Mat::Identity(1 << n, 1 << n);
        for (const Gate& g : c.gates)
            via_embed = embed_on_wires(gate_matrix(g), g.wires, n) * via_embed;
        CHECK(approx_equal(via_cols, via_embed, 1e-10));
        CHECK(approx_equal(via_cols.adjoint() * via_cols,
                           Mat::Identity(1 << n, 1 << n), 1e-10));
    }
}

TEST_CASE("composition law for circuit_unitary") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 10; ++t) {
        Circuit a = random_circuit(3, 5, rng());
        Circuit b = random_circuit(3, 7, rng());
        Circuit ab = a;
        ab.gates.insert(ab.gates.end(), b.gates.begin(), b.gates.end());
        CHECK(approx_equal(circuit_unitary(ab),
                           circuit_unitary(b) * circuit_unitary(a), 1e-10));
    }
}

TEST_CASE("slice_unitary") {
    std::mt19937_64 rng(34);
    Circuit c = random_circuit(3, 9, 77);
    CHECK(approx_equal(slice_unitary(c, 1, c.size()), circuit_unitary(c), 1e-12));
    Mat g4 = embed_on_wires(gate_matrix(c.gates[3]), c.gates[3].wires, 3);
    CHECK(approx_equal(slice_unitary(c, 4, 4), g4, 1e-12));
    CHECK(approx_equal(slice_unitary(c, 5, 4), Mat::Identity(8, 8), 1e-12));
    CHECK_THROWS_AS(slice_unitary(c, 0, 2), ContractError);
}

TEST_CASE("rz matches diag(1, e^{i theta}) exactly") {
    double theta = 0.7853981634;
    Mat m = gate_matrix(Gate::rz(1, theta));
    Mat want = Mat::Zero(2, 2);
    want(0, 0) = 1;
    want(1, 1) = std::exp(cplx(0, theta));
    CHECK(approx_equal(m, want, 1e-12));
}

TEST_CASE("eig_unitary on named gates") {
    auto z = eig_unitary(dense_pauli(SignedPauli::single(1, 1, 'Z')));
    std::vector<double> re;
    for (auto v : z.values) re.push_back(v.real());
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-1.0));
    CHECK(re[1] == doctest::Approx(1.0));

    Mat t = Mat::Zero(2, 2);
    t(0, 0) = 1;
    t(1, 1) = std::exp(cplx(0, 3.14159265358979323846 / 4));
    auto te = eig_unitary(t);
    bool has_one = false, has_eighth = false;
    for (auto v : te.values) {
        if (std::abs(v - cplx(1, 0)) < 1e-9) has_one = true;
        if (std::abs(v - t(1, 1)) < 1e-9) has_eighth = true;
    }
    CHECK(has_one);
    CHECK(has_eighth);

    Circuit cx;
    cx.n = 2;
    cx.gates.push_back(Gate::cnot(1, 2));
    auto ce = eig_unitary(circuit_unitary(cx));
    int plus = 0, minus = 0;
    for (auto v : ce.values) {
        if (std::abs(v - cplx(1, 0)) < 1e-9) ++plus;
        if (std::abs(v - cplx(-1, 0)) < 1e-9) ++minus;
    }
    CHECK(plus == 3);  // characteristic polynomial (x-1)^3 (x+1)
    CHECK(minus == 1);
}

TEST_CASE("eig_unitary reconstructs and is orthonormal") {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 25; ++t) {
        int n = 2;
        Circuit c = random_circuit(n, 8, rng());
        Mat u = circuit_unitary(c);
        auto e = eig_unitary(u);
        Mat d = Mat::Zero(u.rows(), u.rows());
        for (int i = 0; i < u.rows(); ++i) d(i, i) = e.values[i];
        CHECK(approx_equal(e.vectors * d * e.vectors.adjoint(), u, 1e-9));
        CHECK(approx_equal(e.vectors.adjoint() * e.vectors,
                           Mat::Identity(u.rows(), u.rows()), 1e-9));
    }
    CHECK_THROWS_AS(eig_unitary(2.0 * Mat::Identity(2, 2)), ContractError);
}

TEST_CASE("eigenvalue multiset invariant under Clifford basis change") {
    std::mt19937_64 rng(36);
    for (int t = 0; t < 10; ++t) {
        Circuit c = random_circuit(2, 6, rng());
        Mat u = circuit_unitary(c);
        // random Clifford conjugation
        Circuit cl = random_circuit(2, 8, rng(), 0.0);
        Mat v = circuit_unitary(cl);
        auto e1 = eig_unitary(u);
        auto e2 = eig_unitary(v * u * v.adjoint());
        auto key = [](std::vector<cplx> vals) {
            std::sort(vals.begin(), vals.end(), [](cplx a, cplx b) {
                return std::arg(a) < std::arg(b);
            });
            return vals;
        };
        auto k1 = key(e1.values), k2 = key(e2.values);
        for (size_t i = 0; i < k1.size(); ++i) CHECK(std::abs(k1[i] - k2[i]) < 1e-7);
    }
}

TEST_CASE("expectation basics") {
    Mat rho = Mat::Zero(2, 2);
    rho(1, 1) = 1;  // |1><1|
    CHECK(expectation(Mat::Identity(2, 2), rho) == doctest::Approx(1.0));
    Mat m0 = Mat::Zero(2, 2);
    m0(0, 0) = 1;
    CHECK(expectation(m0, rho) == doctest::Approx(0.0));
    Vec plus(2);
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    Mat rho0 = Mat::Zero(2, 2);
    rho0(0, 0) = 1;
    CHECK(expectation(plus * plus.adjoint(), rho0) == doctest::Approx(0.5));
}

TEST_CASE("born_sample basics and frequency") {
    std::mt19937_64 rng(37);
    Vec psi = basis_state(1, 0);
    CHECK(born_sample(psi, Mat::Identity(2, 2), rng) == 1);
    CHECK(born_sample(psi, Mat::Zero(2, 2), rng) == 0);
    Vec plus(2);
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    Mat m0 = Mat::Zero(2, 2);
    m0(0, 0) = 1;
    int hits = 0;
    const int shots = 10000;
    for (int i = 0; i < shots; ++i) hits += born_sample(plus, m0, rng);
    CHECK(std::abs(hits / double(shots) - 0.5) < 0.02);
}
