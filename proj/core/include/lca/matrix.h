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

#ifndef LCA_MATRIX_H
#define LCA_MATRIX_H

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lca/rational.h"

namespace lca {

/// Dense row-major matrix of exact rationals. A 0x0 matrix is allowed and is the
/// identity of direct sums.
class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(size_t rows, size_t cols);
    /// Row-wise literal; all rows must have equal length.
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(size_t n);
    static RationalMatrix zeros(size_t rows, size_t cols);
    static RationalMatrix diagonal(const std::vector<Rational> &entries);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>> &rows);
    static RationalMatrix from_integer_rows(const std::vector<std::vector<Integer>> &rows);
    static RationalMatrix column(const std::vector<Rational> &entries);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    Rational &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Rational &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    const std::vector<Rational> &data() const {
        return data_;
    }

    std::vector<Rational> row(size_t r) const;
    std::vector<Rational> col(size_t c) const;

    RationalMatrix transpose() const;
    RationalMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void set_block(size_t r0, size_t c0, const RationalMatrix &b);

    bool is_integer() const;
    bool is_zero() const;
    bool is_antisymmetric() const;
    bool is_identity() const;
    /// Least common multiple of all denominators (1 for an integer matrix).
    Integer common_denominator() const;

    RationalMatrix operator+(const RationalMatrix &o) const;
    RationalMatrix operator-(const RationalMatrix &o) const;
    RationalMatrix operator-() const;
    RationalMatrix operator*(const RationalMatrix &o) const;
    RationalMatrix operator*(const Rational &s) const;
    std::vector<Rational> operator*(const std::vector<Rational> &v) const;
    bool operator==(const RationalMatrix &o) const;
    bool operator!=(const RationalMatrix &o) const {
        return !(*this == o);
    }

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix direct_sum(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix hstack(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix vstack(const RationalMatrix &a, const RationalMatrix &b);
/// [[a, b], [c, d]] with conforming shapes.
RationalMatrix block2x2(
    const RationalMatrix &a, const RationalMatrix &b, const RationalMatrix &c, const RationalMatrix &d);

/// Integer entry (r, c); throws if non-integer.
Integer integer_entry(const RationalMatrix &m, size_t r, size_t c);
std::vector<Integer> integer_column(const RationalMatrix &m, size_t c);
RationalMatrix from_integer_vector(const std::vector<Integer> &v);

}  // namespace lca

#endif
