// Copyright 2026 The lcacode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCA_CATALOG_H
#define LCA_CATALOG_H

#include <optional>
#include <vector>

#include "lca/codes.h"

namespace lca {

/// Symmetric 8 x 8 integer symplectic generator matrix of the E8 lattice. It is symplectic
/// in the block ordering (x_1..x_4, p_1..p_4); mod 2 it is the four-qubit cluster circuit
/// X_j -> X_{j-1} Z_j X_{j+1}, Z_j -> Z_{j-1} X_j Z_{j+1}.
RationalMatrix e8_matrix();

/// Permutation P taking block coordinates to interleaved ones (x_1, p_1, x_2, p_2, ...).
/// An interleaved-ordering matrix M' corresponds to the block-ordering matrix P^T M' P.
RationalMatrix interleave_permutation(size_t p);

/// Oscillator-qubit code whose qubit encoder T_dv is the 2k x 2p binary generator matrix G.
/// R completes the rows of G to a unimodular matrix, every qubit has c = 2 and d = 1, and
/// Theta = R^T ([[0, L1], [-L1, 0]] (+) [[0, L2], [-L2, 0]]) R. L1 and L2 are the diagonals
/// (entries +-1); both default to all ones.
/// Throws std::invalid_argument if G is not binary, has dependent rows mod 2, does not extend
/// to a unimodular matrix, or if k >= p.
GeneralLcaCode binary_code_lca(
    const RationalMatrix &g,
    const std::optional<std::vector<Integer>> &l1 = std::nullopt,
    const std::optional<std::vector<Integer>> &l2 = std::nullopt);

/// Splits an anti-symmetric rational commutation matrix A into Theta - Z = A and builds the code.
/// With P^T A P = [[0, h/m], [-h/m, 0]] from the alternating Smith form of m A, each pair gets
/// h_j / m = K_j / c_j in lowest terms and d_j = K_j - c_j theta_j. The default theta_j is
/// floor(K_j / c_j). A pair with h_j = 0 has Z = 0 and a GKP block theta_j (default 1), so
/// Theta - Z = A holds only when every h_j is nonzero. Theta and Z are the standard-frame
/// blocks pulled back by P^-1.
/// Throws std::invalid_argument on malformed A or theta_vec of the wrong length, and
/// std::domain_error when Theta - Z is singular.
GeneralLcaCode commutation_matrix_code(
    const RationalMatrix &a, const std::optional<std::vector<Integer>> &theta_vec = std::nullopt);

}  // namespace lca

#endif
