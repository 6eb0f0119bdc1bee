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

#ifndef LCA_SYMPLECTIC_H
#define LCA_SYMPLECTIC_H

#include <vector>

#include "lca/matrix.h"
#include "lca/rational.h"

namespace lca {

/// Coordinates are block-ordered: (x_1..x_p, p_1..p_p) for oscillators and
/// (X_1..X_k, Z_1..Z_k) exponents for qudits.
struct SymplecticForm {
    size_t p = 0;
    std::vector<Integer> cvec;
    RationalMatrix j_cv;
    RationalMatrix j_dv;

    static SymplecticForm make(size_t p, const std::vector<Integer> &cvec);
    size_t k() const {
        return cvec.size();
    }
    /// J_cv (+) J_dv.
    RationalMatrix full() const;
};

/// [[0, I_p], [-I_p, 0]].
RationalMatrix j_cv(size_t p);
/// [[0, c^-1], [-c^-1, 0]] with c = diag(cvec).
RationalMatrix j_dv(const std::vector<Integer> &cvec);
/// Copy of j with every negative entry replaced by zero, so j = j' - j'^T.
RationalMatrix j_prime(const RationalMatrix &j);

/// Represents diag(sqrt(row_radicands)) * base * diag(sqrt(col_radicands)) exactly.
/// Radicands are stored as positive integers with square factors pulled into base.
class ScaledMatrix {
   public:
    ScaledMatrix() = default;
    ScaledMatrix(std::vector<Rational> row_radicands, RationalMatrix base);
    ScaledMatrix(std::vector<Rational> row_radicands, RationalMatrix base, std::vector<Rational> col_radicands);
    static ScaledMatrix from_rational(const RationalMatrix &m);

    size_t rows() const {
        return base_.rows();
    }
    size_t cols() const {
        return base_.cols();
    }
    const std::vector<Rational> &radicands() const {
        return row_;
    }
    const std::vector<Rational> &col_radicands() const {
        return col_;
    }
    const RationalMatrix &base() const {
        return base_;
    }

    ScaledMatrix transpose() const;
    /// Throws std::domain_error when singular.
    ScaledMatrix inverse() const;
    /// Rows [r0, r0 + n).
    ScaledMatrix row_block(size_t r0, size_t n) const;

    bool is_rational() const;
    /// Throws std::domain_error if any nonzero entry is irrational.
    RationalMatrix to_rational() const;
    std::vector<std::vector<double>> to_double() const;
    double entry_double(size_t r, size_t c) const;

    /// Exact entrywise equality of the represented real matrices.
    bool equals(const ScaledMatrix &o) const;

   private:
    void normalize();

    std::vector<Rational> row_;
    RationalMatrix base_;
    std::vector<Rational> col_;
};

/// X * Y; throws std::domain_error if an inner radicand product is not a rational square.
ScaledMatrix multiply(const ScaledMatrix &x, const ScaledMatrix &y);
ScaledMatrix multiply(const RationalMatrix &m, const ScaledMatrix &x);
ScaledMatrix multiply(const ScaledMatrix &x, const RationalMatrix &m);
/// [top; bottom]; column radicands must agree.
ScaledMatrix vstack(const ScaledMatrix &top, const ScaledMatrix &bottom);

/// Exact X^T J Y. Throws std::domain_error if some nonzero J entry pairs radicands whose
/// product is not a rational square, or if a result entry is irrational.
RationalMatrix pair(const ScaledMatrix &x, const ScaledMatrix &y, const RationalMatrix &j);

/// Integer M with M^T J_cv M = J_cv.
bool is_integer_symplectic(const RationalMatrix &m, size_t p);
/// Integer M with M^T J_dv M = J_dv exactly over the rationals. Throws on non-integer M.
bool is_mod_symplectic(const RationalMatrix &m, const std::vector<Integer> &cvec);
/// Integer M with M^T J_dv M - J_dv integral: every Pauli commutation phase is preserved.
/// This is the condition for M mod cvec to be a qudit Clifford symplectic.
bool preserves_pauli_phases(const RationalMatrix &m, const std::vector<Integer> &cvec);

struct MoritaElement {
    RationalMatrix a, b, c, d;

    RationalMatrix assembled() const;
    static MoritaElement from_assembled(const RationalMatrix &g);
    static MoritaElement identity(size_t n);
    MoritaElement operator*(const MoritaElement &o) const;
    /// [[D^T, B^T], [C^T, A^T]], the inverse of any element preserving [[0, I], [I, 0]].
    MoritaElement inverse() const;
    bool operator==(const MoritaElement &o) const;
};

bool is_so_nn(const MoritaElement &g);

/// (A theta + B)(C theta + D)^-1; throws std::domain_error when C theta + D is singular.
RationalMatrix mobius(const MoritaElement &g, const RationalMatrix &theta);

/// Row i of a 2k-row qudit matrix acts on qudit i mod k; entries reduced into [0, c).
RationalMatrix mod_reduce(const RationalMatrix &m, const std::vector<Integer> &cvec);

/// Image of basis vector `generator_index` (0..k-1: X_j, k..2k-1: Z_j) under M, reduced
/// mod cvec. Throws std::invalid_argument if M does not preserve Pauli phases.
std::vector<Integer> symplectic_pauli_action(
    const RationalMatrix &m, const std::vector<Integer> &cvec, size_t generator_index);

}  // namespace lca

#endif
