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

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "qatpg/circuit.hpp"
#include "qatpg/stabilizer.hpp"

namespace qatpg {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cplx = std::complex<double>;

/// Central numeric tolerances. The paper specifies none; everything
/// tolerance-sensitive reads from here.
struct NumericPolicy {
    double atol = 1e-9;      // exact-arithmetic style comparisons
    double opt_tol = 1e-6;   // optimizer-facing checks
    int dense_cap = 12;      // largest qubit count for dense matrices
};

inline const NumericPolicy& default_policy() {
    static NumericPolicy p;
    return p;
}

void check_dense_cap(int n, int cap = default_policy().dense_cap);

Mat kron(const Mat& a, const Mat& b);  // b on the low-order qubits

// Basis convention is little-endian: wire 1 is the least significant bit of
// the state index, matching x = sum_i x_i 2^(i-1).
Mat dense_pauli(const SignedPauli& p);
Mat dense_projector(const StabilizerProjector& s,
                    int cap = default_policy().dense_cap);
// Group-average form (1/|G|) sum_g g; used as an independent oracle route.
Mat dense_projector_group_average(const StabilizerProjector& s,
                                  int cap = default_policy().dense_cap);

Mat gate_matrix(const Gate& g);  // local matrix over the gate's wires
Mat embed_on_wires(const Mat& local, const std::vector<int>& wires, int n);

Mat circuit_unitary(const Circuit& c, int cap = default_policy().dense_cap);
// U_{i:j} = U_j ... U_i (1-based, inclusive); i > j gives the identity.
Mat slice_unitary(const Circuit& c, int i, int j,
                  int cap = default_policy().dense_cap);

// Statevector simulation.
Vec basis_state(int n, uint64_t index);
void apply_gate(Vec& state, const Gate& g, int n);
Vec run_statevector(const Circuit& c, const Vec& in);
// Probability that measuring wires 1..m yields all zeros.
double prob_zero_prefix(const Vec& state, int n, int m);

// Spectral decomposition of a small unitary via its Hermitian and
// anti-Hermitian parts, diagonalized simultaneously.
struct UnitaryEigen {
    std::vector<cplx> values;
    Mat vectors;  // columns, orthonormal
};
UnitaryEigen eig_unitary(const Mat& u, double atol = default_policy().atol);

double expectation(const Mat& m, const Mat& rho);

// One Bernoulli trial with parameter tr(projector * |state><state|).
int born_sample(const Vec& state, const Mat& projector, std::mt19937_64& rng);

bool approx_equal(const Mat& a, const Mat& b, double atol);
// Equality up to a global phase on b.
bool approx_equal_phase(const Mat& a, const Mat& b, double atol);

}  // namespace qatpg
