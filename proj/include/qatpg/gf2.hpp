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
#include <optional>
#include <vector>

namespace qatpg {

class SignedPauli;

/// Dense bit matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
  public:
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);
    void xor_row(int dst, int src);
    void swap_rows(int a, int b);
    bool row_zero(int r) const;

    // Loads the 2n-bit symplectic vector of p (x block then z block) into row r.
    void load_row(int r, const SignedPauli& p);

    int rank() const;

    // In-place reduced row echelon form; returns pivot column per pivot row.
    std::vector<int> rref();

    // Solves M x = b; returns any solution or nullopt if inconsistent.
    static std::optional<std::vector<bool>> solve(const BitMatrix& m,
                                                  const std::vector<bool>& b);

  private:
    int rows_, cols_, wpr_;
    std::vector<uint64_t> data_;
};

// Symplectic inner product of two 2n-bit vectors given as (x||z) bool rows.
bool symplectic_dot(const std::vector<bool>& a, const std::vector<bool>& b);

std::vector<bool> pauli_bits(const SignedPauli& p);            // x||z, 2n bits
SignedPauli pauli_from_bits(const std::vector<bool>& bits);    // positive sign

// Basis of the intersection of the row spaces spanned by a and b
// (Zassenhaus). Inputs need not be independent.
std::vector<std::vector<bool>> rowspace_intersection(
    const std::vector<std::vector<bool>>& a,
    const std::vector<std::vector<bool>>& b);

// True iff v lies in the span of basis (basis rows need not be reduced).
bool in_span(const std::vector<std::vector<bool>>& basis,
             const std::vector<bool>& v);

}  // namespace qatpg
