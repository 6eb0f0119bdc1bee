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

#include "lca/symplectic.h"

#include <cmath>
#include <stdexcept>

#include "lca/exactmath.h"

namespace lca {

namespace {

// Writes sqrt(r) = scale * sqrt(n) with n a positive integer free of small square factors.
void split_radicand(const Rational &r, Integer *n, Rational *scale) {
    if (r <= 0) {
        throw std::invalid_argument("radicands must be positive, got " + to_string(r));
    }
    Integer num = r.get_num() * r.get_den();
    Rational s = ratio(1, r.get_den());
    Rational root;
    if (rational_sqrt(Rational(num), &root)) {
        *n = 1;
        *scale = s * root;
        return;
    }
    for (unsigned long f = 2; f < 1000 && f * f <= num; f++) {
        Integer f2 = Integer(f) * Integer(f);
        while (mpz_divisible_p(num.get_mpz_t(), f2.get_mpz_t())) {
            num /= f2;
            s *= Integer(f);
        }
    }
    *n = num;
    *scale = s;
}

Rational exact_root(const Rational &r, const char *what) {
    Rational root;
    if (!rational_sqrt(r, &root)) {
        throw std::domain_error(std::string(what) + ": radicand product " + to_string(r) + " is not a rational square");
    }
    return root;
}

}  // namespace

RationalMatrix j_cv(size_t p) {
    RationalMatrix j(2 * p, 2 * p);
    for (size_t i = 0; i < p; i++) {
        j(i, p + i) = 1;
        j(p + i, i) = -1;
    }
    return j;
}

RationalMatrix j_dv(const std::vector<Integer> &cvec) {
    size_t k = cvec.size();
    RationalMatrix j(2 * k, 2 * k);
    for (size_t i = 0; i < k; i++) {
        if (cvec[i] < 1) {
            throw std::invalid_argument("qudit dimensions must be positive");
        }
        j(i, k + i) = ratio(1, cvec[i]);
        j(k + i, i) = -ratio(1, cvec[i]);
    }
    return j;
}

RationalMatrix j_prime(const RationalMatrix &j) {
    RationalMatrix out = j;
    for (size_t r = 0; r < j.rows(); r++) {
        for (size_t c = 0; c < j.cols(); c++) {
            if (out(r, c) < 0) {
                out(r, c) = 0;
            }
        }
    }
    return out;
}

SymplecticForm SymplecticForm::make(size_t p, const std::vector<Integer> &cvec) {
    SymplecticForm f;
    f.p = p;
    f.cvec = cvec;
    f.j_cv = lca::j_cv(p);
    f.j_dv = lca::j_dv(cvec);
    return f;
}

RationalMatrix SymplecticForm::full() const {
    return direct_sum(j_cv, j_dv);
}

ScaledMatrix::ScaledMatrix(std::vector<Rational> row_radicands, RationalMatrix base)
    : row_(std::move(row_radicands)), base_(std::move(base)), col_(base_.cols(), Rational(1)) {
    if (row_.size() != base_.rows()) {
        throw std::invalid_argument("ScaledMatrix: one radicand per row required");
    }
    normalize();
}

ScaledMatrix::ScaledMatrix(std::vector<Rational> row_radicands, RationalMatrix base, std::vector<Rational> col_radicands)
    : row_(std::move(row_radicands)), base_(std::move(base)), col_(std::move(col_radicands)) {
    if (row_.size() != base_.rows() || col_.size() != base_.cols()) {
        throw std::invalid_argument("ScaledMatrix: radicand count does not match shape");
    }
    normalize();
}

ScaledMatrix ScaledMatrix::from_rational(const RationalMatrix &m) {
    return ScaledMatrix(std::vector<Rational>(m.rows(), Rational(1)), m);
}

void ScaledMatrix::normalize() {
    for (size_t r = 0; r < row_.size(); r++) {
        Integer n;
        Rational s;
        split_radicand(row_[r], &n, &s);
        row_[r] = Rational(n);
        if (s != 1) {
            for (size_t c = 0; c < base_.cols(); c++) {
                base_(r, c) *= s;
            }
        }
    }
    for (size_t c = 0; c < col_.size(); c++) {
        Integer n;
        Rational s;
        split_radicand(col_[c], &n, &s);
        col_[c] = Rational(n);
        if (s != 1) {
            for (size_t r = 0; r < base_.rows(); r++) {
                base_(r, c) *= s;
            }
        }
    }
}

ScaledMatrix ScaledMatrix::transpose() const {
    return ScaledMatrix(col_, base_.transpose(), row_);
}

ScaledMatrix ScaledMatrix::inverse() const {
    std::vector<Rational> inv_row(col_.size()), inv_col(row_.size());
    for (size_t k = 0; k < col_.size(); k++) {
        inv_row[k] = 1 / col_[k];
    }
    for (size_t k = 0; k < row_.size(); k++) {
        inv_col[k] = 1 / row_[k];
    }
    return ScaledMatrix(inv_row, lca::inverse(base_), inv_col);
}

ScaledMatrix ScaledMatrix::row_block(size_t r0, size_t n) const {
    std::vector<Rational> rr(row_.begin() + r0, row_.begin() + r0 + n);
    return ScaledMatrix(rr, base_.block(r0, 0, n, base_.cols()), col_);
}

bool ScaledMatrix::is_rational() const {
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < cols(); c++) {
            if (base_(r, c) != 0 && !rational_sqrt(row_[r] * col_[c], nullptr)) {
                return false;
            }
        }
    }
    return true;
}

RationalMatrix ScaledMatrix::to_rational() const {
    RationalMatrix out(rows(), cols());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < cols(); c++) {
            if (base_(r, c) != 0) {
                out(r, c) = base_(r, c) * exact_root(row_[r] * col_[c], "to_rational");
            }
        }
    }
    return out;
}

double ScaledMatrix::entry_double(size_t r, size_t c) const {
    return base_(r, c).get_d() * std::sqrt(row_[r].get_d() * col_[c].get_d());
}

std::vector<std::vector<double>> ScaledMatrix::to_double() const {
    std::vector<std::vector<double>> out(rows(), std::vector<double>(cols()));
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < cols(); c++) {
            out[r][c] = entry_double(r, c);
        }
    }
    return out;
}

bool ScaledMatrix::equals(const ScaledMatrix &o) const {
    if (rows() != o.rows() || cols() != o.cols()) {
        return false;
    }
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < cols(); c++) {
            const Rational &x = base_(r, c);
            const Rational &y = o.base_(r, c);
            if (sgn(x) != sgn(y)) {
                return false;
            }
            if (x * x * row_[r] * col_[c] != y * y * o.row_[r] * o.col_[c]) {
                return false;
            }
        }
    }
    return true;
}

ScaledMatrix multiply(const ScaledMatrix &x, const ScaledMatrix &y) {
    if (x.cols() != y.rows()) {
        throw std::invalid_argument("multiply: inner dimension mismatch");
    }
    std::vector<Rational> mid(x.cols());
    for (size_t t = 0; t < x.cols(); t++) {
        mid[t] = exact_root(x.col_radicands()[t] * y.radicands()[t], "multiply");
    }
    return ScaledMatrix(x.radicands(), x.base() * RationalMatrix::diagonal(mid) * y.base(), y.col_radicands());
}

ScaledMatrix multiply(const RationalMatrix &m, const ScaledMatrix &x) {
    if (m.cols() != x.rows()) {
        throw std::invalid_argument("multiply: inner dimension mismatch");
    }
    std::vector<Rational> out_rad(m.rows(), Rational(1));
    RationalMatrix scaled(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); i++) {
        bool have_ref = false;
        for (size_t t = 0; t < m.cols(); t++) {
            if (m(i, t) == 0) {
                continue;
            }
            if (!have_ref) {
                out_rad[i] = x.radicands()[t];
                have_ref = true;
            }
            scaled(i, t) = m(i, t) * exact_root(x.radicands()[t] / out_rad[i], "multiply");
        }
    }
    return ScaledMatrix(out_rad, scaled * x.base(), x.col_radicands());
}

ScaledMatrix multiply(const ScaledMatrix &x, const RationalMatrix &m) {
    return multiply(m.transpose(), x.transpose()).transpose();
}

ScaledMatrix vstack(const ScaledMatrix &top, const ScaledMatrix &bottom) {
    if (top.col_radicands() != bottom.col_radicands()) {
        throw std::invalid_argument("vstack: column radicands differ");
    }
    std::vector<Rational> rr = top.radicands();
    rr.insert(rr.end(), bottom.radicands().begin(), bottom.radicands().end());
    return ScaledMatrix(rr, vstack(top.base(), bottom.base()), top.col_radicands());
}

RationalMatrix pair(const ScaledMatrix &x, const ScaledMatrix &y, const RationalMatrix &j) {
    if (j.rows() != x.rows() || j.cols() != y.rows()) {
        throw std::invalid_argument("pair: form does not match operand row counts");
    }
    RationalMatrix scaled_j(j.rows(), j.cols());
    for (size_t k = 0; k < j.rows(); k++) {
        for (size_t l = 0; l < j.cols(); l++) {
            if (j(k, l) != 0) {
                scaled_j(k, l) = j(k, l) * exact_root(x.radicands()[k] * y.radicands()[l], "pair");
            }
        }
    }
    RationalMatrix inner = x.base().transpose() * scaled_j * y.base();
    for (size_t r = 0; r < inner.rows(); r++) {
        for (size_t c = 0; c < inner.cols(); c++) {
            if (inner(r, c) != 0) {
                inner(r, c) *= exact_root(x.col_radicands()[r] * y.col_radicands()[c], "pair");
            }
        }
    }
    return inner;
}

bool is_integer_symplectic(const RationalMatrix &m, size_t p) {
    if (m.rows() != 2 * p || m.cols() != 2 * p || !m.is_integer()) {
        return false;
    }
    RationalMatrix j = j_cv(p);
    return m.transpose() * j * m == j;
}

bool is_mod_symplectic(const RationalMatrix &m, const std::vector<Integer> &cvec) {
    if (!m.is_integer()) {
        throw std::invalid_argument("is_mod_symplectic: matrix has non-integer entries");
    }
    if (m.rows() != 2 * cvec.size() || m.cols() != 2 * cvec.size()) {
        return false;
    }
    RationalMatrix j = j_dv(cvec);
    return m.transpose() * j * m == j;
}

bool preserves_pauli_phases(const RationalMatrix &m, const std::vector<Integer> &cvec) {
    if (!m.is_integer() || m.rows() != 2 * cvec.size() || m.cols() != 2 * cvec.size()) {
        return false;
    }
    RationalMatrix j = j_dv(cvec);
    return (m.transpose() * j * m - j).is_integer();
}

RationalMatrix MoritaElement::assembled() const {
    return block2x2(a, b, c, d);
}

MoritaElement MoritaElement::from_assembled(const RationalMatrix &g) {
    if (!g.is_square() || g.rows() % 2 != 0) {
        throw std::invalid_argument("Morita element must be square with even dimension");
    }
    size_t n = g.rows() / 2;
    return {g.block(0, 0, n, n), g.block(0, n, n, n), g.block(n, 0, n, n), g.block(n, n, n, n)};
}

MoritaElement MoritaElement::identity(size_t n) {
    return {RationalMatrix::identity(n), RationalMatrix::zeros(n, n), RationalMatrix::zeros(n, n),
            RationalMatrix::identity(n)};
}

MoritaElement MoritaElement::operator*(const MoritaElement &o) const {
    return from_assembled(assembled() * o.assembled());
}

MoritaElement MoritaElement::inverse() const {
    return {d.transpose(), b.transpose(), c.transpose(), a.transpose()};
}

bool MoritaElement::operator==(const MoritaElement &o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

bool is_so_nn(const MoritaElement &g) {
    size_t n = g.a.rows();
    for (const RationalMatrix *blk : {&g.a, &g.b, &g.c, &g.d}) {
        if (blk->rows() != n || blk->cols() != n || !blk->is_integer()) {
            return false;
        }
    }
    RationalMatrix zero = RationalMatrix::zeros(n, n);
    if (g.a.transpose() * g.c + g.c.transpose() * g.a != zero) {
        return false;
    }
    if (g.b.transpose() * g.d + g.d.transpose() * g.b != zero) {
        return false;
    }
    if (g.a.transpose() * g.d + g.c.transpose() * g.b != RationalMatrix::identity(n)) {
        return false;
    }
    return det(g.assembled()) == 1;
}

RationalMatrix mobius(const MoritaElement &g, const RationalMatrix &theta) {
    RationalMatrix denom = g.c * theta + g.d;
    if (det(denom) == 0) {
        throw std::domain_error("mobius: C*theta + D is singular, action undefined at this theta");
    }
    return (g.a * theta + g.b) * lca::inverse(denom);
}

RationalMatrix mod_reduce(const RationalMatrix &m, const std::vector<Integer> &cvec) {
    if (cvec.empty()) {
        throw std::invalid_argument("mod_reduce: empty qudit dimension list");
    }
    RationalMatrix out(m.rows(), m.cols());
    size_t k = cvec.size();
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(r, c) = Rational(mod_floor(to_integer(m(r, c)), cvec[r % k]));
        }
    }
    return out;
}

std::vector<Integer> symplectic_pauli_action(
    const RationalMatrix &m, const std::vector<Integer> &cvec, size_t generator_index) {
    if (!preserves_pauli_phases(m, cvec)) {
        throw std::invalid_argument("symplectic_pauli_action: matrix is not symplectic modulo the qudit dimensions");
    }
    if (generator_index >= m.cols()) {
        throw std::out_of_range("symplectic_pauli_action: generator index out of range");
    }
    RationalMatrix red = mod_reduce(m, cvec);
    return integer_column(red, generator_index);
}

}  // namespace lca
