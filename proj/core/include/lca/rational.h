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

#ifndef LCA_RATIONAL_H
#define LCA_RATIONAL_H

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lca {

using Integer = mpz_class;
// Always canonical: gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;

/// Canonical n/d; d != 0. Prefer this over the two-argument mpq_class constructor,
/// which does not reduce.
Rational ratio(const Integer &n, const Integer &d);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

bool is_integer(const Rational &q);
/// Requires is_integer(q).
Integer to_integer(const Rational &q);

/// Least non-negative residue of a modulo m (m > 0).
Integer mod_floor(const Integer &a, const Integer &m);
/// Floor of a/b for b != 0.
Integer floor_div(const Integer &a, const Integer &b);
/// Fractional part in [0, 1).
Rational frac(const Rational &q);
Integer floor(const Rational &q);

Integer gcd(const Integer &a, const Integer &b);
Integer lcm(const Integer &a, const Integer &b);

/// True iff q = r^2 for some rational r; stores |r| in root when non-null.
bool rational_sqrt(const Rational &q, Rational *root);

long to_long(const Integer &z);

}  // namespace lca

#endif
