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

#ifndef LCA_TESTS_TEST_UTIL_H
#define LCA_TESTS_TEST_UTIL_H

#include <random>
#include <utility>

#include "lca/exactmath.h"
#include "lca/matrix.h"

namespace lca_test {

inline long uniform(std::mt19937_64 &rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline lca::RationalMatrix random_integer_matrix(std::mt19937_64 &rng, size_t r, size_t c, long bound) {
    lca::RationalMatrix m(r, c);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < c; j++) {
            m(i, j) = uniform(rng, -bound, bound);
        }
    }
    return m;
}

inline lca::RationalMatrix random_antisymmetric(std::mt19937_64 &rng, size_t n, long bound) {
    lca::RationalMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            long v = uniform(rng, -bound, bound);
            m(i, j) = v;
            m(j, i) = -v;
        }
    }
    return m;
}

/// Product of random elementary integer operations; determinant +-1 by construction.
inline lca::RationalMatrix random_unimodular(std::mt19937_64 &rng, size_t n, int steps = 12) {
    lca::RationalMatrix u = lca::RationalMatrix::identity(n);
    if (n < 2) {
        return u;
    }
    for (int s = 0; s < steps; s++) {
        size_t i = static_cast<size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        size_t j = static_cast<size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
        if (j >= i) {
            j++;
        }
        long q = uniform(rng, -2, 2);
        for (size_t r = 0; r < n; r++) {
            u(r, i) += u(r, j) * q;
        }
        if (uniform(rng, 0, 5) == 0) {
            for (size_t r = 0; r < n; r++) {
                u(r, i) = -u(r, i);
            }
        }
    }
    return u;
}

/// Random anti-symmetric rational matrix V^T N V where N pairs `rank_pairs` coordinates with
/// entries num/den (|num| <= 3, 1 <= den <= max_den) and V is unimodular.
inline lca::RationalMatrix random_rational_antisymmetric(std::mt19937_64 &rng, size_t p, size_t rank_pairs,
                                                         long max_den) {
    size_t n = 2 * p;
    lca::RationalMatrix nmat(n, n);
    for (size_t j = 0; j < rank_pairs && j < p; j++) {
        long num = 0;
        while (num == 0) {
            num = uniform(rng, -3, 3);
        }
        lca::Rational v = lca::ratio(num, uniform(rng, 1, max_den));
        nmat(j, p + j) = v;
        nmat(p + j, j) = -v;
    }
    lca::RationalMatrix v = random_unimodular(rng, n, 8);
    return v.transpose() * nmat * v;
}

/// Random (Theta, Z) with Theta integer, Z rational, both anti-symmetric and Theta - Z invertible.
inline std::pair<lca::RationalMatrix, lca::RationalMatrix> random_code_input(std::mt19937_64 &rng, size_t p) {
    while (true) {
        lca::RationalMatrix theta = random_antisymmetric(rng, 2 * p, 2);
        size_t pairs = static_cast<size_t>(uniform(rng, 0, static_cast<long>(p)));
        lca::RationalMatrix z = random_rational_antisymmetric(rng, p, pairs, 5);
        if (lca::det(theta - z) != 0) {
            return {theta, z};
        }
    }
}

}  // namespace lca_test

#endif
