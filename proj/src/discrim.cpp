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

#include "qatpg/discrim.hpp"

#include <algorithm>
#include <cmath>

namespace qatpg {

namespace {
constexpr double kPi = 3.14159265358979323846;

struct EigenCluster {
    double angle;
    Vec vector;  // first canonical eigenvector of the cluster
};
}  // namespace

OptimalInput optimal_input(const Mat& u, const Mat& u_prime) {
    if (u.rows() != u_prime.rows())
        throw ContractError("optimal_input dimension mismatch");
    Mat w = u.adjoint() * u_prime;
    UnitaryEigen eig = eig_unitary(w);

    // Cluster equal eigenvalues; any eigenvector of a degenerate eigenspace
    // gives the same r, so keep the first.
    std::vector<EigenCluster> cl;
    for (size_t i = 0; i < eig.values.size(); ++i) {
        double a = std::arg(eig.values[i]);
        bool merged = false;
        for (auto& c : cl) {
            double d = std::remainder(a - c.angle, 2 * kPi);
            if (std::abs(d) < 1e-9) {
                merged = true;
                break;
            }
        }
        if (!merged) cl.push_back({a, eig.vectors.col(int(i))});
    }
    if (cl.size() == 1) return {cl[0].vector, 1.0};

    // Largest circular gap between eigenvalue angles. A gap >= pi means all
    // points sit in a closed half-plane; the hull point nearest the origin
    // is then the midpoint of the chord across the gap (the two endpoints
    // are equidistant from the origin, so the perpendicular foot is the
    // midpoint and the optimal weights are 1/2, 1/2).
    std::sort(cl.begin(), cl.end(),
              [](const EigenCluster& a, const EigenCluster& b) {
                  return a.angle < b.angle;
              });
    size_t m = cl.size();
    double best_gap = -1;
    size_t gap_at = 0;  // gap between cl[gap_at] and its circular successor
    for (size_t i = 0; i < m; ++i) {
        double next = cl[(i + 1) % m].angle + (i + 1 == m ? 2 * kPi : 0.0);
        double gap = next - cl[i].angle;
        if (gap > best_gap) {
            best_gap = gap;
            gap_at = i;
        }
    }
    if (best_gap >= kPi - 1e-12) {
        const EigenCluster& a = cl[gap_at];
        const EigenCluster& b = cl[(gap_at + 1) % m];
        cplx la = std::exp(cplx(0, a.angle)), lb = std::exp(cplx(0, b.angle));
        double r = std::abs(la + lb) / 2.0;
        Vec psi = (a.vector + b.vector) / std::sqrt(2.0);
        return {psi, r};
    }
    // Origin lies strictly inside the hull: r = 0. By Caratheodory a convex
    // combination supported on at most 3 eigenvalues hits the origin.
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k) {
                Eigen::Matrix3d a;
                cplx li = std::exp(cplx(0, cl[i].angle)),
                     lj = std::exp(cplx(0, cl[j].angle)),
                     lk = std::exp(cplx(0, cl[k].angle));
                a << li.real(), lj.real(), lk.real(), li.imag(), lj.imag(),
                    lk.imag(), 1, 1, 1;
                Eigen::Vector3d b(0, 0, 1);
                Eigen::Vector3d sol = a.fullPivLu().solve(b);
                if ((a * sol - b).norm() > 1e-9) continue;
                if (sol.minCoeff() < -1e-12) continue;
                Vec psi = std::sqrt(std::max(0.0, sol(0))) * cl[i].vector +
                          std::sqrt(std::max(0.0, sol(1))) * cl[j].vector +
                          std::sqrt(std::max(0.0, sol(2))) * cl[k].vector;
                psi.normalize();
                return {psi, 0.0};
            }
    throw NumericError("optimal_input failed to localize the hull minimum");
}

HelstromBasis helstrom_basis(const Vec& psi, const Vec& psi_prime) {
    if (psi.size() != psi_prime.size())
        throw ContractError("helstrom dimension mismatch");
    cplx ip = (psi.adjoint() * psi_prime).value();
    double r = std::abs(ip);
    if (r >= 1.0 - 1e-12)
        throw InfeasibleError("states are parallel; discrimination undefined");
    double theta = std::arg(ip);
    cplx rot = std::exp(cplx(0, -theta));
    Vec sum = psi + rot * psi_prime;
    Vec diff = psi - rot * psi_prime;
    sum /= sum.norm();
    diff /= diff.norm();
    HelstromBasis out;
    out.omega = (sum + diff) / std::sqrt(2.0);
    out.omega_prime = (sum - diff) / std::sqrt(2.0);
    return out;
}

Mat fault_free_matrix(const Gate& g) { return gate_matrix(g); }

Mat faulty_matrix(const Gate& g, const FaultModel& fm) {
    int64_t dim = int64_t(1) << g.arity();
    if (fm.kind == FaultKind::MissingGate) return Mat::Identity(dim, dim);
    Mat u = Mat::Identity(dim, dim);
    for (const Gate& r : fm.replacement) {
        for (int w : r.wires)
            if (w < 1 || w > g.arity())
                throw ContractError("replacement wire outside fault gate");
        u = embed_on_wires(gate_matrix(r), r.wires, g.arity()) * u;
    }
    return u;
}

GatePattern gate_pattern(const Circuit& c, int site, const FaultModel& fm) {
    if (site < 1 || site > c.size()) throw ContractError("fault site out of range");
    const Gate& g = c.gates[site - 1];
    if (g.arity() > 2)
        throw ContractError("discrimination supports gates on at most 2 qubits");
    Mat u = fault_free_matrix(g);
    Mat up = faulty_matrix(g, fm);
    if (std::abs(std::abs((u.adjoint() * up).trace()) - double(u.rows())) < 1e-9)
        throw InfeasibleError("fault is undetectable (faulty gate equals the gate)");
    OptimalInput oi = optimal_input(u, up);
    GatePattern out;
    out.psi_in = oi.psi;
    out.r = oi.r;
    out.p_success = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - oi.r * oi.r)));
    Vec psi = u * oi.psi;
    Vec psi_prime = up * oi.psi;
    HelstromBasis hb = helstrom_basis(psi, psi_prime);
    out.omega = hb.omega;
    out.omega_prime = hb.omega_prime;
    return out;
}

IdealTestPattern ideal_test_pattern(const Circuit& c, int site,
                                    const FaultModel& fm, int cap) {
    check_dense_cap(c.n, cap);
    IdealTestPattern out;
    out.local = gate_pattern(c, site, fm);
    const Gate& g = c.gates[site - 1];
    int rest = c.n - g.arity();
    Mat psi_proj = out.local.psi_in * out.local.psi_in.adjoint();
    Mat omega_proj = out.local.omega * out.local.omega.adjoint();
    Mat rho_local =
        embed_on_wires(psi_proj, g.wires, c.n) / double(int64_t(1) << rest);
    Mat m_local = embed_on_wires(omega_proj, g.wires, c.n);
    Mat pre = slice_unitary(c, 1, site - 1, cap);
    Mat post = slice_unitary(c, site + 1, c.size(), cap);
    out.rho = pre.adjoint() * rho_local * pre;
    out.m = post * m_local * post.adjoint();
    return out;
}

}  // namespace qatpg
