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

#ifndef LCA_EXACTMATH_H
#define LCA_EXACTMATH_H

#include <optional>
#include <vector>

#include "lca/matrix.h"
#include "lca/rational.h"

namespace lca {

/// Exact determinant. Rows are scaled to integers and reduced by Bareiss elimination.
Rational det(const RationalMatrix &m);

/// Exact inverse; throws std::domain_error on a singular matrix.
RationalMatrix inverse(const RationalMatrix &m);

/// Pfaffian of an even-dimensional anti-symmetric matrix; Pf(A)^2 = det(A).
Rational pfaffian(const RationalMatrix &a);

/// Integers with b*c - a*d = 1.
struct BezoutPair {
    Integer a;
    Integer b;
};

/// Canonical pair: smallest |b|, then smallest |a|, then a > 0.
/// Throws std::invalid_argument unless gcd(c, d) = 1 and c >= 1.
BezoutPair bezout_pair(const Integer &c, const Integer &d);

/// Extended gcd: returns g = gcd(a, b) >= 0 with x*a + y*b = g.
Integer extended_gcd(const Integer &a, const Integer &b, Integer *x, Integer *y);

struct AltSmithDecomposition {
    /// Unimodular P with P^T A P = canonical_alt_form(n, h).
    RationalMatrix transform;
    size_t k = 0;
    /// h_1 | h_2 | ... | h_k, all positive.
    std::vector<Integer> h;
};

/// [[0, diag(h), 0], [-diag(h), 0, 0], [0, 0, 0]] of size n x n.
RationalMatrix canonical_alt_form(size_t n, const std::vector<Integer> &h);

/// Alternating Smith normal form of an integer anti-symmetric matrix under unimodular congruence.
AltSmithDecomposition alt_smith(const RationalMatrix &a);

/// n x n unimodular matrix whose leading rows are `rows`.
/// Throws std::invalid_argument if the rows do not extend to a unimodular basis.
RationalMatrix complete_unimodular(const std::vector<std::vector<Integer>> &rows);

/// Column echelon form over the integers: A * U = H with U unimodular and H lower echelon.
struct ColumnEchelon {
    RationalMatrix h;
    RationalMatrix u;
    /// pivot_col[r] is the pivot column of row r, or -1 if row r has no pivot.
    std::vector<long> pivot_col;
    size_t rank = 0;
};
ColumnEchelon column_echelon(const RationalMatrix &a);

/// Some integer x with A x = b, or nullopt if none exists. A and b must be integer.
std::optional<std::vector<Integer>> solve_integer(const RationalMatrix &a, const std::vector<Integer> &b);

/// Matrix with every entry reduced into [0, modulus).
RationalMatrix mod_matrix(const RationalMatrix &m, const Integer &modulus);

}  // namespace lca

#endif
