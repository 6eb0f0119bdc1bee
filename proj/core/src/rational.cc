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

#include "lca/rational.h"

#include <stdexcept>

namespace lca {

namespace {

bool valid_integer_text(std::string_view s) {
    size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); i++) {
        if (s[i] < '0' || s[i] > '9') {
            return false;
        }
    }
    return true;
}

Integer integer_from_text(std::string_view s) {
    if (!valid_integer_text(s)) {
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    std::string t(s[0] == '+' ? s.substr(1) : s);
    return Integer(t, 10);
}

}  // namespace

Rational ratio(const Integer &n, const Integer &d) {
    if (d == 0) {
        throw std::invalid_argument("ratio: zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(integer_from_text(text));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    Integer n = integer_from_text(num);
    Integer d = integer_from_text(den);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Integer parse_integer(std::string_view text) {
    return integer_from_text(text);
}

std::string to_string(const Rational &q) {
    return q.get_str(10);
}

std::string to_string(const Integer &z) {
    return z.get_str(10);
}

bool is_integer(const Rational &q) {
    return q.get_den() == 1;
}

Integer to_integer(const Rational &q) {
    if (!is_integer(q)) {
        throw std::invalid_argument("expected an integer, got " + to_string(q));
    }
    return q.get_num();
}

Integer mod_floor(const Integer &a, const Integer &m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer floor_div(const Integer &a, const Integer &b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor(const Rational &q) {
    return floor_div(q.get_num(), q.get_den());
}

Rational frac(const Rational &q) {
    return q - Rational(floor(q));
}

Integer gcd(const Integer &a, const Integer &b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer &a, const Integer &b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool rational_sqrt(const Rational &q, Rational *root) {
    if (q < 0) {
        return false;
    }
    const Integer &n = q.get_num();
    const Integer &d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
        return false;
    }
    if (root != nullptr) {
        Integer rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        *root = Rational(rn, rd);
        root->canonicalize();
    }
    return true;
}

long to_long(const Integer &z) {
    if (!z.fits_slong_p()) {
        throw std::out_of_range("integer " + to_string(z) + " does not fit in a long");
    }
    return z.get_si();
}

}  // namespace lca
