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

#include <algorithm>
#include <bit>
#include <cmath>

namespace qatpg {

namespace {
const cplx kI(0.0, 1.0);
}

void check_dense_cap(int n, int cap) {
    if (n > cap) throw ContractError("dense cap exceeded: n=" + std::to_string(n));
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Mat dense_pauli(const SignedPauli& p) {
    int n = p.num_qubits();
    check_dense_cap(n);
    int64_t dim = int64_t(1) << n;
    Mat out = Mat::Zero(dim, dim);
    // Column j maps to row j ^ xmask with phase from Z bits and Y count.
    uint64_t xmask = 0, zmask = 0;
    int ycount = 0;
    for (int q = 1; q <= n; ++q) {
        if (p.x(q)) xmask |= uint64_t(1) << (q - 1);
        if (p.z(q)) zmask |= uint64_t(1) << (q - 1);
        if (p.x(q) && p.z(q)) ++ycount;
    }
    // P = sign * i^ycount * prod_q X^x Z^z (per qubit, X before Z); acting on
    // |j>: Z gives (-1)^{j.z}, then X flips bits.
    static const cplx ipow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    cplx base = double(p.sign()) * ipow[ycount & 3];
    for (int64_t j = 0; j < dim; ++j) {
        int zpar = std::popcount(uint64_t(j) & zmask) & 1;
        cplx amp = base * (zpar ? -1.0 : 1.0);
        out(j ^ int64_t(xmask), j) = amp;
    }
    return out;
}

Mat dense_projector(const StabilizerProjector& s, int cap) {
    check_dense_cap(s.num_qubits(), cap);
    int64_t dim = int64_t(1) << s.num_qubits();
    Mat out = Mat::Identity(dim, dim);
    for (const auto& g : s.generators())
        out = out * (Mat::Identity(dim, dim) + dense_pauli(g)) * 0.5;
    return out;
}

Mat dense_projector_group_average(const StabilizerProjector& s, int cap) {
    check_dense_cap(s.num_qubits(), cap);
    int64_t dim = int64_t(1) << s.num_qubits();
    Mat out = Mat::Zero(dim, dim);
    auto els = s.elements();
    for (const auto& g : els) out += dense_pauli(g);
    return out / double(els.size());
}

Mat gate_matrix(const Gate& g) {
    const double s2 = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::H: {
            Mat m(2, 2);
            m << s2, s2, s2, -s2;
            return m;
        }
        case GateKind::S: {
            Mat m = Mat::Zero(2, 2);
            m(0, 0) = 1;
            m(1, 1) = kI;
            return m;
        }
        case GateKind::Sdg: {
            Mat m = Mat::Zero(2, 2);
            m(0, 0) = 1;
            m(1, 1) = -kI;
            return m;
        }
        case GateKind::X: return dense_pauli(SignedPauli::single(1, 1, 'X'));
        case GateKind::Y: return dense_pauli(SignedPauli::single(1, 1, 'Y'));
        case GateKind::Z: return dense_pauli(SignedPauli::single(1, 1, 'Z'));
        case GateKind::Cnot: {
            // Local basis index = x_control + 2 * x_target.
            Mat m = Mat::Zero(4, 4);
            m(0, 0) = 1;
            m(3, 1) = 1;
            m(2, 2) = 1;
            m(1, 3) = 1;
            return m;
        }
        case GateKind::Swap: {
            Mat m = Mat::Zero(4, 4);
            m(0, 0) = 1;
            m(2, 1) = 1;
            m(1, 2) = 1;
            m(3, 3) = 1;
            return m;
        }
        case GateKind::Rotation: {
            int k = g.arity();
            int64_t dim = int64_t(1) << k;
            Mat p = dense_pauli(g.rot_pauli);
            cplx ph = std::exp(kI * (g.theta / 2.0));
            return ph * (std::cos(g.theta / 2) * Mat::Identity(dim, dim) -
                         kI * std::sin(g.theta / 2) * p);
        }
    }
    throw Error("unreachable gate kind");
}

Mat embed_on_wires(const Mat& local, const std::vector<int>& wires, int n) {
    check_dense_cap(n);
    int k = int(wires.size());
    int64_t dim = int64_t(1) << n;
    int64_t ldim = int64_t(1) << k;
    Mat out = Mat::Zero(dim, dim);
    // Iterate over assignments of the non-gate wires ("rest") and scatter the
    // local block.
    std::vector<int> rest;
    for (int q = 1; q <= n; ++q)
        if (std::find(wires.begin(), wires.end(), q) == wires.end())
            rest.push_back(q);
    auto compose = [&](int64_t local_bits, int64_t rest_bits) {
        int64_t idx = 0;
        for (int p = 0; p < k; ++p)
            if ((local_bits >> p) & 1) idx |= int64_t(1) << (wires[p] - 1);
        for (size_t p = 0; p < rest.size(); ++p)
            if ((rest_bits >> p) & 1) idx |= int64_t(1) << (rest[p] - 1);
        return idx;
    };
    int64_t rdim = int64_t(1) << rest.size();
    for (int64_t r = 0; r < rdim; ++r)
        for (int64_t i = 0; i < ldim; ++i)
            for (int64_t j = 0; j < ldim; ++j)
                if (local(i, j) != 0.0)
                    out(compose(i, r), compose(j, r)) = local(i, j);
    return out;
}

Vec basis_state(int n, uint64_t index) {
    check_dense_cap(n);
    Vec v = Vec::Zero(int64_t(1) << n);
    v(int64_t(index)) = 1.0;
    return v;
}

void apply_gate(Vec& state, const Gate& g, int n) {
    Mat local = gate_matrix(g);
    int k = g.arity();
    int64_t ldim = int64_t(1) << k;
    // Gather/scatter amplitudes over the gate's wires.
    std::vector<int64_t> wmask(k);
    for (int p = 0; p < k; ++p) wmask[p] = int64_t(1) << (g.wires[p] - 1);
    int64_t gate_mask = 0;
    for (auto m : wmask) gate_mask |= m;
    int64_t dim = int64_t(1) << n;
    std::vector<cplx> buf(ldim);
    for (int64_t base = 0; base < dim; ++base) {
        if (base & gate_mask) continue;
        for (int64_t i = 0; i < ldim; ++i) {
            int64_t idx = base;
            for (int p = 0; p < k; ++p)
                if ((i >> p) & 1) idx |= wmask[p];
            buf[i] = state(idx);
        }
        for (int64_t i = 0; i < ldim; ++i) {
            cplx acc = 0;
            for (int64_t j = 0; j < ldim; ++j) acc += local(i, j) * buf[j];
            int64_t idx = base;
            for (int p = 0; p < k; ++p)
                if ((i >> p) & 1) idx |= wmask[p];
            state(idx) = acc;
        }
    }
}

Vec run_statevector(const Circuit& c, const Vec& in) {
    Vec state = in;
    for (const Gate& g : c.gates) apply_gate(state, g, c.n);
    return state;
}

double prob_zero_prefix(const Vec& state, int n, int m) {
    if (m == 0) return 1.0;
    int64_t mask = (int64_t(1) << m) - 1;
    double p = 0;
    for (int64_t i = 0; i < state.size(); ++i)
        if ((i & mask) == 0) p += std::norm(state(i));
    (void)n;
    return p;
}

Mat circuit_unitary(const Circuit& c, int cap) {
    check_dense_cap(c.n, cap);
    int64_t dim = int64_t(1) << c.n;
    Mat u = Mat::Identity(dim, dim);
    // Apply each gate to the columns rather than forming the full embedding.
    for (const Gate& g : c.gates) {
        for (int64_t col = 0; col < dim; ++col) {
            Vec v = u.col(col);
            apply_gate(v, g, c.n);
            u.col(col) = v;
        }
    }
    return u;
}

Mat slice_unitary(const Circuit& c, int i, int j, int cap) {
    if (i < 1 || (j > c.size()))
        throw ContractError("slice indices out of range");
    return circuit_unitary(c.slice(i, j), cap);
}

UnitaryEigen eig_unitary(const Mat& u, double atol) {
    if (u.rows() != u.cols() || u.rows() > 16)
        throw ContractError("eig_unitary expects a small square matrix");
    int dim = int(u.rows());
    if (!approx_equal(u.adjoint() * u, Mat::Identity(dim, dim), 1e-8))
        throw ContractError("eig_unitary input is not unitary");
    // Simultaneously diagonalize the commuting Hermitian parts
    // (U+U^dag)/2 and (U-U^dag)/2i.
    Mat h1 = (u + u.adjoint()) / 2.0;
    Mat h2 = (u - u.adjoint()) / (2.0 * kI);
    Eigen::SelfAdjointEigenSolver<Mat> es1(h1);
    Mat basis = es1.eigenvectors();
    Eigen::VectorXd ev1 = es1.eigenvalues();
    UnitaryEigen out;
    out.vectors = Mat::Zero(dim, dim);
    out.values.resize(dim);
    int start = 0;
    while (start < dim) {
        int stop = start + 1;
        while (stop < dim && std::abs(ev1(stop) - ev1(start)) < 1e-7) ++stop;
        int blk = stop - start;
        Mat sub = basis.middleCols(start, blk);
        Eigen::SelfAdjointEigenSolver<Mat> es2(sub.adjoint() * h2 * sub);
        Mat rotated = sub * es2.eigenvectors();
        for (int i = 0; i < blk; ++i) {
            Vec v = rotated.col(i);
            out.vectors.col(start + i) = v;
            out.values[start + i] = (v.adjoint() * u * v).value();
        }
        start = stop;
    }
    for (auto& v : out.values)
        if (std::abs(std::abs(v) - 1.0) > std::max(atol, 1e-9))
            throw NumericError("unitary eigenvalue off the unit circle");
    return out;
}

double expectation(const Mat& m, const Mat& rho) {
    if (m.rows() != rho.rows()) throw ContractError("expectation dim mismatch");
    return (m * rho).trace().real();
}

int born_sample(const Vec& state, const Mat& projector, std::mt19937_64& rng) {
    double p = (state.adjoint() * projector * state).value().real();
    p = std::min(1.0, std::max(0.0, p));
    double u = double(rng() >> 11) * 0x1p-53;
    return u < p ? 1 : 0;
}

bool approx_equal(const Mat& a, const Mat& b, double atol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return (a - b).cwiseAbs().maxCoeff() <= atol;
}

bool approx_equal_phase(const Mat& a, const Mat& b, double atol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    // Align the phase on the largest entry of b.
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(b(r, c)) < atol) return approx_equal(a, b, atol);
    if (std::abs(a(r, c)) < atol) return false;
    cplx phase = a(r, c) / b(r, c);
    phase /= std::abs(phase);
    return approx_equal(a, phase * b, atol);
}

}  // namespace qatpg
