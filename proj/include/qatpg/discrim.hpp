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

#include "qatpg/circuit.hpp"
#include "qatpg/dense.hpp"

namespace qatpg {

/// Gate-level discrimination data: the optimal local input state, the
/// Helstrom basis on the two output states, the minimal inner product r and
/// the success probability (1 + sqrt(1-r^2))/2.
struct GatePattern {
    Vec psi_in;
    Vec omega, omega_prime;
    double r = 1.0;
    double p_success = 0.5;
};

/// Minimizes |<psi| U^dag U' |psi>| over unit vectors. The minimum is the
/// distance from the origin to the convex hull of the eigenvalues of
/// U^dag U'; the optimal weights sit on at most two eigenvalues.
struct OptimalInput {
    Vec psi;
    double r;
};
OptimalInput optimal_input(const Mat& u, const Mat& u_prime);

// Helstrom basis for the pure pair (psi, psi'); throws InfeasibleError when
// the states are parallel (discrimination undefined).
struct HelstromBasis {
    Vec omega, omega_prime;
};
HelstromBasis helstrom_basis(const Vec& psi, const Vec& psi_prime);

// Local matrices for the fault-free gate and its faulty version.
Mat fault_free_matrix(const Gate& g);
Mat faulty_matrix(const Gate& g, const FaultModel& fm);

// Full gate-level pattern for one fault site; throws InfeasibleError when
// the fault is undetectable (U' = U up to phase).
GatePattern gate_pattern(const Circuit& c, int site, const FaultModel& fm);

/// Dense end-to-end test pattern: rho = U_{1:i-1}^dag (I/tr I (x) |psi><psi|)
/// U_{1:i-1}, M = U_{i+1:d} (I (x) |omega><omega|) U_{i+1:d}^dag.
struct IdealTestPattern {
    Mat rho;
    Mat m;
    GatePattern local;
};
IdealTestPattern ideal_test_pattern(const Circuit& c, int site,
                                    const FaultModel& fm,
                                    int cap = default_policy().dense_cap);

}  // namespace qatpg
