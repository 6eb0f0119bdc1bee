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

#include "lca/matrix.h"

#include <sstream>
#include <stdexcept>

namespace lca {

namespace {

void require_same_shape(const RationalMatrix &a, const RationalMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream ss;
        ss << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
        throw std::invalid_argument(ss.str());
    }
}

}  // namespace

RationalMatrix::RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        for (long v : r) {
            data_.emplace_back(v);
        }
    }
}

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::zeros(size_t rows, size_t cols) {
    return RationalMatrix(rows, cols);
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational> &entries) {
    RationalMatrix m(entries.size(), entries.size());
    for (size_t k = 0; k < entries.size(); k++) {
        m(k, k) = entries[k];
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>> &rows) {
    size_t nc = rows.empty() ? 0 : rows[0].size();
    RationalMatrix m(rows.size(), nc);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != nc) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (size_t c = 0; c < nc; c++) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

RationalMatrix RationalMatrix::from_integer_rows(const std::vector<std::vector<Integer>> &rows) {
    size_t nc = rows.empty() ? 0 : rows[0].size();
    RationalMatrix m(rows.size(), nc);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != nc) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (size_t c = 0; c < nc; c++) {
            m(r, c) = Rational(rows[r][c]);
        }
    }
    return m;
}

RationalMatrix RationalMatrix::column(const std::vector<Rational> &entries) {
    RationalMatrix m(entries.size(), 1);
    for (size_t k = 0; k < entries.size(); k++) {
        m(k, 0) = entries[k];
    }
    return m;
}

std::vector<Rational> RationalMatrix::row(size_t r) const {
    return std::vector<Rational>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<Rational> RationalMatrix::col(size_t c) const {
    std::vector<Rational> out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

RationalMatrix RationalMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw std::out_of_range("block out of range");
    }
    RationalMatrix b(nr, nc);
    for (size_t r = 0; r < nr; r++) {
        for (size_t c = 0; c < nc; c++) {
            b(r, c) = (*this)(r0 + r, c0 + c);
        }
    }
    return b;
}

void RationalMatrix::set_block(size_t r0, size_t c0, const RationalMatrix &b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
        throw std::out_of_range("set_block out of range");
    }
    for (size_t r = 0; r < b.rows(); r++) {
        for (size_t c = 0; c < b.cols(); c++) {
            (*this)(r0 + r, c0 + c) = b(r, c);
        }
    }
}

bool RationalMatrix::is_integer() const {
    for (const auto &q : data_) {
        if (q.get_den() != 1) {
            return false;
        }
    }
    return true;
}

bool RationalMatrix::is_zero() const {
    for (const auto &q : data_) {
        if (q != 0) {
            return false;
        }
    }
    return true;
}

bool RationalMatrix::is_antisymmetric() const {
    if (!is_square()) {
        return false;
    }
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = r; c < cols_; c++) {
            if ((*this)(r, c) != -(*this)(c, r)) {
                return false;
            }
        }
    }
    return true;
}

bool RationalMatrix::is_identity() const {
    return is_square() && *this == identity(rows_);
}

Integer RationalMatrix::common_denominator() const {
    Integer l = 1;
    for (const auto &q : data_) {
        l = lcm(l, q.get_den());
    }
    return l;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix &o) const {
    require_same_shape(*this, o, "add");
    RationalMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); k++) {
        out.data_[k] = data_[k] + o.data_[k];
    }
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix &o) const {
    require_same_shape(*this, o, "subtract");
    RationalMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); k++) {
        out.data_[k] = data_[k] - o.data_[k];
    }
    return out;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); k++) {
        out.data_[k] = -data_[k];
    }
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix &o) const {
    if (cols_ != o.rows_) {
        std::ostringstream ss;
        ss << "multiply: inner dimension mismatch " << rows_ << "x" << cols_ << " * " << o.rows_ << "x" << o.cols_;
        throw std::invalid_argument(ss.str());
    }
    RationalMatrix out(rows_, o.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            const Rational &a = (*this)(r, k);
            if (a == 0) {
                continue;
            }
            for (size_t c = 0; c < o.cols_; c++) {
                const Rational &b = o(k, c);
                if (b != 0) {
                    out(r, c) += a * b;
                }
            }
        }
    }
    return out;
}

RationalMatrix RationalMatrix::operator*(const Rational &s) const {
    RationalMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); k++) {
        out.data_[k] = data_[k] * s;
    }
    return out;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational> &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector dimension mismatch");
    }
    std::vector<Rational> out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out[r] += (*this)(r, c) * v[c];
        }
    }
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string RationalMatrix::str() const {
    std::ostringstream ss;
    ss << "[";
    for (size_t r = 0; r < rows_; r++) {
        ss << (r == 0 ? "[" : ", [");
        for (size_t c = 0; c < cols_; c++) {
            ss << (c == 0 ? "" : ", ") << to_string((*this)(r, c));
        }
        ss << "]";
    }
    ss << "]";
    return ss.str();
}

RationalMatrix direct_sum(const RationalMatrix &a, const RationalMatrix &b) {
    RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

RationalMatrix hstack(const RationalMatrix &a, const RationalMatrix &b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("hstack: row count mismatch");
    }
    RationalMatrix out(a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

RationalMatrix vstack(const RationalMatrix &a, const RationalMatrix &b) {
    if (a.cols() != b.cols()) {
        throw std::invalid_argument("vstack: column count mismatch");
    }
    RationalMatrix out(a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

RationalMatrix block2x2(
    const RationalMatrix &a, const RationalMatrix &b, const RationalMatrix &c, const RationalMatrix &d) {
    return vstack(hstack(a, b), hstack(c, d));
}

Integer integer_entry(const RationalMatrix &m, size_t r, size_t c) {
    return to_integer(m(r, c));
}

std::vector<Integer> integer_column(const RationalMatrix &m, size_t c) {
    std::vector<Integer> out(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        out[r] = to_integer(m(r, c));
    }
    return out;
}

RationalMatrix from_integer_vector(const std::vector<Integer> &v) {
    RationalMatrix m(v.size(), 1);
    for (size_t k = 0; k < v.size(); k++) {
        m(k, 0) = Rational(v[k]);
    }
    return m;
}

}  // namespace lca
