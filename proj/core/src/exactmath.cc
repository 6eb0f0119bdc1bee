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

#include "lca/exactmath.h"

#include <stdexcept>
#include <utility>

namespace lca {

namespace {

// Dense integer square matrix tracked together with an accumulated congruence transform.
class CongruenceWorkspace {
   public:
    explicit CongruenceWorkspace(const RationalMatrix &a) : n_(a.rows()), a_(n_ * n_), p_(n_ * n_) {
        for (size_t r = 0; r < n_; r++) {
            for (size_t c = 0; c < n_; c++) {
                a_[r * n_ + c] = to_integer(a(r, c));
            }
            p_[r * n_ + r] = 1;
        }
    }

    Integer &at(size_t r, size_t c) {
        return a_[r * n_ + c];
    }

    // col dst += q col src, row dst += q row src.
    void add(size_t dst, size_t src, const Integer &q) {
        if (q == 0) {
            return;
        }
        for (size_t r = 0; r < n_; r++) {
            a_[r * n_ + dst] += q * a_[r * n_ + src];
            p_[r * n_ + dst] += q * p_[r * n_ + src];
        }
        for (size_t c = 0; c < n_; c++) {
            a_[dst * n_ + c] += q * a_[src * n_ + c];
        }
    }

    void swap(size_t i, size_t j) {
        if (i == j) {
            return;
        }
        for (size_t r = 0; r < n_; r++) {
            std::swap(a_[r * n_ + i], a_[r * n_ + j]);
            std::swap(p_[r * n_ + i], p_[r * n_ + j]);
        }
        for (size_t c = 0; c < n_; c++) {
            std::swap(a_[i * n_ + c], a_[j * n_ + c]);
        }
    }

    void negate(size_t i) {
        for (size_t r = 0; r < n_; r++) {
            a_[r * n_ + i] = -a_[r * n_ + i];
            p_[r * n_ + i] = -p_[r * n_ + i];
        }
        for (size_t c = 0; c < n_; c++) {
            a_[i * n_ + c] = -a_[i * n_ + c];
        }
    }

    RationalMatrix transform() const {
        RationalMatrix p(n_, n_);
        for (size_t r = 0; r < n_; r++) {
            for (size_t c = 0; c < n_; c++) {
                p(r, c) = Rational(p_[r * n_ + c]);
            }
        }
        return p;
    }

   private:
    size_t n_;
    std::vector<Integer> a_;
    std::vector<Integer> p_;
};

Integer abs_int(const Integer &z) {
    Integer r;
    mpz_abs(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

}  // namespace

Rational det(const RationalMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("det: matrix is not square");
    }
    size_t n = m.rows();
    if (n == 0) {
        return Rational(1);
    }
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (size_t r = 0; r < n; r++) {
        Integer l = 1;
        for (size_t c = 0; c < n; c++) {
            l = lcm(l, m(r, c).get_den());
        }
        scale *= l;
        for (size_t c = 0; c < n; c++) {
            a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
        }
    }
    int sign = 1;
    Integer prev = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) {
                swap_row++;
            }
            if (swap_row == n) {
                return Rational(0);
            }
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++) {
            for (size_t j = k + 1; j < n; j++) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    Rational out(a[n - 1][n - 1] * sign, scale);
    out.canonicalize();
    return out;
}

RationalMatrix inverse(const RationalMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("inverse: matrix is not square");
    }
    size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (size_t k = 0; k < n; k++) {
        size_t piv = k;
        while (piv < n && a(piv, k) == 0) {
            piv++;
        }
        if (piv == n) {
            throw std::domain_error("inverse: matrix is singular");
        }
        if (piv != k) {
            for (size_t c = 0; c < n; c++) {
                std::swap(a(k, c), a(piv, c));
                std::swap(inv(k, c), inv(piv, c));
            }
        }
        Rational s = 1 / a(k, k);
        for (size_t c = 0; c < n; c++) {
            a(k, c) *= s;
            inv(k, c) *= s;
        }
        for (size_t r = 0; r < n; r++) {
            if (r == k || a(r, k) == 0) {
                continue;
            }
            Rational f = a(r, k);
            for (size_t c = 0; c < n; c++) {
                a(r, c) -= f * a(k, c);
                inv(r, c) -= f * inv(k, c);
            }
        }
    }
    return inv;
}

Rational pfaffian(const RationalMatrix &input) {
    if (!input.is_square() || input.rows() % 2 != 0) {
        throw std::invalid_argument("pfaffian: matrix must be square with even dimension");
    }
    if (!input.is_antisymmetric()) {
        throw std::invalid_argument("pfaffian: matrix is not anti-symmetric");
    }
    size_t n = input.rows();
    RationalMatrix a = input;
    Rational pf = 1;
    auto swap_index = [&](size_t i, size_t j) {
        for (size_t r = 0; r < n; r++) {
            std::swap(a(r, i), a(r, j));
        }
        for (size_t c = 0; c < n; c++) {
            std::swap(a(i, c), a(j, c));
        }
    };
    // col i -= t col j, row i -= t row j.
    auto sub_index = [&](size_t i, size_t j, const Rational &t) {
        for (size_t r = 0; r < n; r++) {
            a(r, i) -= t * a(r, j);
        }
        for (size_t c = 0; c < n; c++) {
            a(i, c) -= t * a(j, c);
        }
    };
    for (size_t k = 0; k < n; k += 2) {
        size_t piv = k + 1;
        while (piv < n && a(k, piv) == 0) {
            piv++;
        }
        if (piv == n) {
            return Rational(0);
        }
        if (piv != k + 1) {
            swap_index(k + 1, piv);
            pf = -pf;
        }
        pf *= a(k, k + 1);
        for (size_t i = k + 2; i < n; i++) {
            if (a(k, i) != 0) {
                sub_index(i, k + 1, a(k, i) / a(k, k + 1));
            }
            if (a(k + 1, i) != 0) {
                sub_index(i, k, a(k + 1, i) / a(k + 1, k));
            }
        }
    }
    return pf;
}

Integer extended_gcd(const Integer &a, const Integer &b, Integer *x, Integer *y) {
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (x != nullptr) {
        *x = s;
    }
    if (y != nullptr) {
        *y = t;
    }
    return g;
}

BezoutPair bezout_pair(const Integer &c, const Integer &d) {
    if (c < 1) {
        throw std::invalid_argument("bezout_pair: c must be positive, got " + to_string(c));
    }
    if (gcd(c, d) != 1) {
        throw std::invalid_argument(
            "bezout_pair: gcd(" + to_string(c) + ", " + to_string(d) + ") != 1");
    }
    if (d == 0) {
        // c = 1: b = 1 and any a works; smallest |a| is 0.
        return {Integer(0), Integer(1)};
    }
    // For |b| = |d| the residues b*c mod |d| cover every class, so the search terminates.
    Integer limit = abs_int(d);
    for (Integer mag = 0; mag <= limit; mag++) {
        std::optional<BezoutPair> best;
        for (int sgn : {1, -1}) {
            Integer b = mag * sgn;
            Integer num = b * c - 1;
            if (mod_floor(num, abs_int(d)) != 0) {
                continue;
            }
            Integer a = num / d;
            BezoutPair cand{a, b};
            if (!best.has_value()) {
                best = cand;
                continue;
            }
            Integer ca = abs_int(cand.a), ba = abs_int(best->a);
            if (ca < ba || (ca == ba && cand.a > 0 && best->a < 0)) {
                best = cand;
            }
        }
        if (best.has_value()) {
            return *best;
        }
    }
    throw std::logic_error("bezout_pair: search exhausted");
}

RationalMatrix canonical_alt_form(size_t n, const std::vector<Integer> &h) {
    size_t k = h.size();
    if (2 * k > n) {
        throw std::invalid_argument("canonical_alt_form: too many invariants for dimension");
    }
    RationalMatrix out(n, n);
    for (size_t j = 0; j < k; j++) {
        out(j, k + j) = Rational(h[j]);
        out(k + j, j) = Rational(-h[j]);
    }
    return out;
}

AltSmithDecomposition alt_smith(const RationalMatrix &a) {
    if (!a.is_square() || !a.is_integer() || !a.is_antisymmetric()) {
        throw std::invalid_argument("alt_smith: expected a square integer anti-symmetric matrix");
    }
    size_t n = a.rows();
    CongruenceWorkspace w(a);
    std::vector<Integer> h;

    for (size_t s = 0; 2 * s + 1 < n; s++) {
        size_t p = 2 * s;
        size_t q = p + 1;
        bool found_any = true;
        while (true) {
            size_t bi = 0, bj = 0;
            Integer best = 0;
            for (size_t i = p; i < n; i++) {
                for (size_t j = i + 1; j < n; j++) {
                    const Integer &v = w.at(i, j);
                    if (v != 0 && (best == 0 || abs_int(v) < best)) {
                        best = abs_int(v);
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (best == 0) {
                found_any = false;
                break;
            }
            w.swap(p, bi);
            w.swap(q, bj);
            Integer g = w.at(p, q);
            bool dirty = false;
            for (size_t l = q + 1; l < n; l++) {
                w.add(l, q, -floor_div(w.at(p, l), g));
                w.add(l, p, -floor_div(w.at(q, l), -g));
                if (w.at(p, l) != 0 || w.at(q, l) != 0) {
                    dirty = true;
                }
            }
            if (dirty) {
                continue;
            }
            bool divisible = true;
            for (size_t i = q + 1; i < n && divisible; i++) {
                for (size_t j = i + 1; j < n; j++) {
                    if (mod_floor(w.at(i, j), abs_int(g)) != 0) {
                        w.add(p, i, 1);
                        divisible = false;
                        break;
                    }
                }
            }
            if (!divisible) {
                continue;
            }
            if (g < 0) {
                w.negate(q);
            }
            h.push_back(abs_int(g));
            break;
        }
        if (!found_any) {
            break;
        }
    }

    size_t k = h.size();
    RationalMatrix perm(n, n);
    for (size_t j = 0; j < k; j++) {
        perm(2 * j, j) = 1;
        perm(2 * j + 1, k + j) = 1;
    }
    for (size_t j = 2 * k; j < n; j++) {
        perm(j, j) = 1;
    }
    AltSmithDecomposition out;
    out.transform = w.transform() * perm;
    out.k = k;
    out.h = h;
    if (out.transform.transpose() * a * out.transform != canonical_alt_form(n, h)) {
        throw std::logic_error("alt_smith: reconstruction check failed");
    }
    return out;
}

ColumnEchelon column_echelon(const RationalMatrix &a) {
    if (!a.is_integer()) {
        throw std::invalid_argument("column_echelon: matrix must be integer");
    }
    size_t m = a.rows();
    size_t n = a.cols();
    std::vector<std::vector<Integer>> h(m, std::vector<Integer>(n));
    std::vector<std::vector<Integer>> u(n, std::vector<Integer>(n));
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < n; c++) {
            h[r][c] = to_integer(a(r, c));
        }
    }
    for (size_t c = 0; c < n; c++) {
        u[c][c] = 1;
    }
    // Column op helpers applied to both H (m rows) and U (n rows).
    auto col_axpy = [&](size_t dst, size_t src, const Integer &q) {
        if (q == 0) {
            return;
        }
        for (size_t r = 0; r < m; r++) {
            h[r][dst] += q * h[r][src];
        }
        for (size_t r = 0; r < n; r++) {
            u[r][dst] += q * u[r][src];
        }
    };
    auto col_swap = [&](size_t i, size_t j) {
        if (i == j) {
            return;
        }
        for (size_t r = 0; r < m; r++) {
            std::swap(h[r][i], h[r][j]);
        }
        for (size_t r = 0; r < n; r++) {
            std::swap(u[r][i], u[r][j]);
        }
    };
    auto col_neg = [&](size_t i) {
        for (size_t r = 0; r < m; r++) {
            h[r][i] = -h[r][i];
        }
        for (size_t r = 0; r < n; r++) {
            u[r][i] = -u[r][i];
        }
    };

    ColumnEchelon out;
    out.pivot_col.assign(m, -1);
    size_t col = 0;
    for (size_t r = 0; r < m && col < n; r++) {
        while (true) {
            size_t best = n;
            for (size_t c = col; c < n; c++) {
                if (h[r][c] != 0 && (best == n || abs_int(h[r][c]) < abs_int(h[r][best]))) {
                    best = c;
                }
            }
            if (best == n) {
                break;
            }
            col_swap(col, best);
            bool done = true;
            for (size_t c = col + 1; c < n; c++) {
                if (h[r][c] != 0) {
                    col_axpy(c, col, -floor_div(h[r][c], h[r][col]));
                    if (h[r][c] != 0) {
                        done = false;
                    }
                }
            }
            if (done) {
                break;
            }
        }
        if (h[r][col] == 0) {
            continue;
        }
        if (h[r][col] < 0) {
            col_neg(col);
        }
        out.pivot_col[r] = static_cast<long>(col);
        col++;
    }
    out.rank = col;
    out.h = RationalMatrix::from_integer_rows(h);
    out.u = RationalMatrix::from_integer_rows(u);
    return out;
}

std::optional<std::vector<Integer>> solve_integer(const RationalMatrix &a, const std::vector<Integer> &b) {
    if (b.size() != a.rows()) {
        throw std::invalid_argument("solve_integer: right-hand side has wrong length");
    }
    ColumnEchelon e = column_echelon(a);
    size_t n = a.cols();
    std::vector<Integer> y(n);
    for (size_t r = 0; r < a.rows(); r++) {
        Integer acc = 0;
        long pc = e.pivot_col[r];
        size_t limit = pc >= 0 ? static_cast<size_t>(pc) : n;
        for (size_t c = 0; c < limit; c++) {
            if (y[c] != 0) {
                acc += to_integer(e.h(r, c)) * y[c];
            }
        }
        Integer rest = b[r] - acc;
        if (pc < 0) {
            if (rest != 0) {
                return std::nullopt;
            }
            continue;
        }
        Integer piv = to_integer(e.h(r, static_cast<size_t>(pc)));
        if (mod_floor(rest, piv) != 0) {
            return std::nullopt;
        }
        y[static_cast<size_t>(pc)] = rest / piv;
    }
    std::vector<Integer> x(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            if (y[c] != 0) {
                x[r] += to_integer(e.u(r, c)) * y[c];
            }
        }
    }
    return x;
}

RationalMatrix complete_unimodular(const std::vector<std::vector<Integer>> &rows) {
    if (rows.empty()) {
        throw std::invalid_argument("complete_unimodular: no rows supplied");
    }
    size_t r = rows.size();
    size_t n = rows[0].size();
    if (r > n) {
        throw std::invalid_argument("complete_unimodular: more rows than columns");
    }
    RationalMatrix g = RationalMatrix::from_integer_rows(rows);
    ColumnEchelon e = column_echelon(g);
    for (size_t i = 0; i < r; i++) {
        if (e.pivot_col[i] != static_cast<long>(i) || abs_int(to_integer(e.h(i, i))) != 1) {
            throw std::invalid_argument(
                "complete_unimodular: rows cannot be extended to a unimodular basis "
                "(dependent rows or a nontrivial invariant factor)");
        }
    }
    RationalMatrix lifted = RationalMatrix::identity(n);
    lifted.set_block(0, 0, e.h.block(0, 0, r, r));
    RationalMatrix out = lifted * inverse(e.u);
    if (out.block(0, 0, r, n) != g || !out.is_integer()) {
        throw std::logic_error("complete_unimodular: completion check failed");
    }
    return out;
}

RationalMatrix mod_matrix(const RationalMatrix &m, const Integer &modulus) {
    RationalMatrix out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(r, c) = Rational(mod_floor(to_integer(m(r, c)), modulus));
        }
    }
    return out;
}

}  // namespace lca
