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

#include "lca/catalog.h"

#include <stdexcept>

#include "lca/exactmath.h"

namespace lca {

RationalMatrix e8_matrix() {
    return RationalMatrix{
        {2, 1, 0, 1, 1, 0, 0, 0},
        {1, 2, 1, 0, 0, 1, 0, 0},
        {0, 1, 2, -1, 0, 0, 1, 0},
        {1, 0, -1, 2, 0, 0, 0, 1},
        {1, 0, 0, 0, 2, -1, 0, -1},
        {0, 1, 0, 0, -1, 2, -1, 0},
        {0, 0, 1, 0, 0, -1, 2, 1},
        {0, 0, 0, 1, -1, 0, 1, 2},
    };
}

RationalMatrix interleave_permutation(size_t p) {
    RationalMatrix perm(2 * p, 2 * p);
    for (size_t i = 0; i < p; i++) {
        perm(2 * i, i) = 1;
        perm(2 * i + 1, p + i) = 1;
    }
    return perm;
}

namespace {

// Rank of a 0/1 matrix over Z_2.
size_t rank_mod2(const RationalMatrix &g) {
    std::vector<std::vector<int>> rows(g.rows(), std::vector<int>(g.cols()));
    for (size_t r = 0; r < g.rows(); r++) {
        for (size_t c = 0; c < g.cols(); c++) {
            rows[r][c] = g(r, c) == 0 ? 0 : 1;
        }
    }
    size_t rank = 0;
    for (size_t c = 0; c < g.cols() && rank < rows.size(); c++) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r][c]) {
                for (size_t j = c; j < g.cols(); j++) {
                    rows[r][j] ^= rows[rank][j];
                }
            }
        }
        rank++;
    }
    return rank;
}

std::vector<Integer> unit_diagonal(const std::optional<std::vector<Integer>> &l, size_t n, const char *name) {
    if (!l) {
        return std::vector<Integer>(n, Integer(1));
    }
    if (l->size() != n) {
        throw std::invalid_argument(std::string("binary_code_lca: ") + name + " has the wrong length");
    }
    for (const Integer &x : *l) {
        if (x != 1 && x != -1) {
            throw std::invalid_argument(std::string("binary_code_lca: ") + name + " entries must be +-1");
        }
    }
    return *l;
}

}  // namespace

GeneralLcaCode binary_code_lca(
    const RationalMatrix &g, const std::optional<std::vector<Integer>> &l1, const std::optional<std::vector<Integer>> &l2) {
    size_t n = g.cols();
    if (g.rows() == 0 || g.rows() % 2 != 0 || n % 2 != 0) {
        throw std::invalid_argument("binary_code_lca: G must be 2k x 2p");
    }
    size_t k = g.rows() / 2, p = n / 2;
    if (k >= p) {
        throw std::invalid_argument("binary_code_lca: need k < p");
    }
    for (size_t r = 0; r < g.rows(); r++) {
        for (size_t c = 0; c < n; c++) {
            if (g(r, c) != 0 && g(r, c) != 1) {
                throw std::invalid_argument("binary_code_lca: G must be a 0/1 matrix");
            }
        }
    }
    if (rank_mod2(g) != g.rows()) {
        throw std::invalid_argument("binary_code_lca: rows of G are dependent over Z_2");
    }
    std::vector<std::vector<Integer>> rows;
    for (size_t r = 0; r < g.rows(); r++) {
        std::vector<Integer> row;
        for (size_t c = 0; c < n; c++) {
            row.push_back(integer_entry(g, r, c));
        }
        rows.push_back(row);
    }
    RationalMatrix r = complete_unimodular(rows);

    std::vector<Integer> d1 = unit_diagonal(l1, k, "L1");
    std::vector<Integer> d2 = unit_diagonal(l2, p - k, "L2");
    // Standard frame: pairs (j, k + j) for the qubits, (2k + i, p + k + i) for the rest.
    RationalMatrix z_std(n, n), theta_std(n, n);
    for (size_t j = 0; j < k; j++) {
        z_std(j, k + j) = ratio(1, 2);
        z_std(k + j, j) = ratio(-1, 2);
        theta_std(j, k + j) = Rational(d1[j]);
        theta_std(k + j, j) = Rational(-d1[j]);
    }
    for (size_t i = 0; i < p - k; i++) {
        theta_std(2 * k + i, p + k + i) = Rational(d2[i]);
        theta_std(p + k + i, 2 * k + i) = Rational(-d2[i]);
    }
    BuildHints hints;
    hints.r = r;
    RationalMatrix rt = r.transpose();
    return build_general(rt * theta_std * r, rt * z_std * r, hints);
}

GeneralLcaCode commutation_matrix_code(const RationalMatrix &a, const std::optional<std::vector<Integer>> &theta_vec) {
    size_t n = a.rows();
    if (n == 0 || n % 2 != 0 || a.cols() != n) {
        throw std::invalid_argument("commutation_matrix_code: A must be 2p x 2p");
    }
    if (!a.is_antisymmetric()) {
        throw std::invalid_argument("commutation_matrix_code: A must be anti-symmetric");
    }
    size_t p = n / 2;
    if (theta_vec && theta_vec->size() != p) {
        throw std::invalid_argument("commutation_matrix_code: theta_vec must have one entry per pair");
    }
    Integer m = a.common_denominator();
    AltSmithDecomposition dec = alt_smith(a * Rational(m));
    size_t k = dec.k;

    // Pair j sits at (j, k + j) for j < k and at (2k + i, p + k + i) for the zero pairs.
    auto first = [&](size_t j) { return j < k ? j : k + j; };
    auto second = [&](size_t j) { return j < k ? k + j : p + j; };
    RationalMatrix theta_std(n, n), z_std(n, n);
    for (size_t j = 0; j < p; j++) {
        Rational ratio_j = j < k ? ratio(dec.h[j], m) : Rational(0);
        Integer c = ratio_j.get_den();
        Integer big_k = ratio_j.get_num();
        Integer theta;
        if (theta_vec) {
            theta = (*theta_vec)[j];
        } else if (j < k) {
            theta = floor_div(big_k, c);
        } else {
            theta = 1;
        }
        // Theta - Z restricted to the pair is theta + d/c = h/m. Zero pairs carry no qudit.
        Rational zj = j < k ? Rational(theta) - ratio_j : Rational(0);
        theta_std(first(j), second(j)) = Rational(theta);
        theta_std(second(j), first(j)) = Rational(-theta);
        z_std(first(j), second(j)) = zj;
        z_std(second(j), first(j)) = -zj;
    }
    RationalMatrix pinv = inverse(dec.transform);
    RationalMatrix pinvt = pinv.transpose();
    return build_general(pinvt * theta_std * pinv, pinvt * z_std * pinv);
}

}  // namespace lca
