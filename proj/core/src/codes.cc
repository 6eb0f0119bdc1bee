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

#include "lca/codes.h"

#include <sstream>
#include <stdexcept>

#include "lca/exactmath.h"

namespace lca {

namespace {

bool is_unimodular(const RationalMatrix &m) {
    if (m.rows() != m.cols() || !m.is_integer()) {
        return false;
    }
    Rational d = det(m);
    return d == 1 || d == -1;
}

// Recovers h from n = canonical_alt_form(n.rows(), h); nullopt if n has another shape or
// some h_j <= 0.
std::optional<std::vector<Integer>> read_canonical(const RationalMatrix &n) {
    size_t dim = n.rows();
    for (size_t k = 0; 2 * k <= dim; k++) {
        std::vector<Integer> h;
        bool ok = true;
        for (size_t j = 0; j < k && ok; j++) {
            const Rational &v = n(j, k + j);
            ok = is_integer(v) && v > 0;
            if (ok) {
                h.push_back(to_integer(v));
            }
        }
        if (ok && n == canonical_alt_form(dim, h)) {
            return h;
        }
    }
    return std::nullopt;
}

// diag(x_1..x_k, x_1..x_k, fill, ..., fill) of size n.
RationalMatrix doubled_diagonal(const std::vector<Rational> &x, size_t n, const Rational &fill) {
    std::vector<Rational> entries(n, fill);
    for (size_t j = 0; j < x.size(); j++) {
        entries[j] = x[j];
        entries[x.size() + j] = x[j];
    }
    return RationalMatrix::diagonal(entries);
}

// [[0, -diag x, 0], [diag x, 0, 0], [0, 0, 0]] of size n.
RationalMatrix skew_pair_block(const std::vector<Rational> &x, size_t n) {
    RationalMatrix out(n, n);
    size_t k = x.size();
    for (size_t j = 0; j < k; j++) {
        out(j, k + j) = -x[j];
        out(k + j, j) = x[j];
    }
    return out;
}

std::vector<Rational> as_rationals(const std::vector<Integer> &v) {
    return {v.begin(), v.end()};
}

RationalMatrix qudit_form_of(const RationalMatrix &x, const RationalMatrix &y, const std::vector<Integer> &cvec) {
    return x.transpose() * j_dv(cvec) * y;
}

}  // namespace

LatticeFrame SimpleLcaCode::frame() const {
    LatticeFrame f;
    f.p = 1;
    f.cvec = {c};
    f.unit_sq = unit_sq;
    f.K = K;
    // Columns: S_X = (K, 0 | -d, 0), S_Z = (0, K | 0, 1).
    f.stabilizers = RationalMatrix::from_integer_rows({{K, 0}, {0, K}, {-d, 0}, {0, 1}});
    // Columns: X-bar = (1, 0 | -1, 0), Z-bar = (0, -1 | 0, a).
    f.logicals = RationalMatrix::from_integer_rows({{1, 0}, {0, -1}, {-1, 0}, {0, a}});
    return f;
}

SimpleLcaCode simple_code(const Integer &c, const Integer &d, const Integer &theta) {
    if (c < 1) {
        throw std::invalid_argument("simple_code: c must be >= 1");
    }
    if (gcd(c, d) != 1) {
        throw std::invalid_argument("simple_code: gcd(c, d) != 1");
    }
    SimpleLcaCode code;
    code.c = c;
    code.d = d;
    code.theta = theta;
    Integer k = c * theta + d;
    if (k == 0) {
        throw std::invalid_argument("simple_code: c*theta + d = 0 gives no code");
    }
    if (k < 0) {
        code.d = -d;
        code.theta = -theta;
        code.flipped = true;
        k = -k;
    }
    BezoutPair bp = bezout_pair(c, code.d);
    code.a = bp.a;
    code.b = bp.b;
    code.K = k;
    code.unit_sq = ratio(1, code.K * c);
    return code;
}

Rational distance_simple(const SimpleLcaCode &code) {
    return ratio(code.c, code.K);
}

RationalMatrix dual_torus(const GeneralLcaCode &code) {
    size_t n = 2 * code.p;
    std::vector<Rational> cinv, aoverc;
    for (size_t j = 0; j < code.k; j++) {
        cinv.push_back(ratio(1, code.cvec[j]));
        aoverc.push_back(ratio(code.avec[j], code.cvec[j]));
    }
    RationalMatrix cd = doubled_diagonal(cinv, n, -1);
    return cd * code.r * inverse(code.theta - code.z) * code.r.transpose() * cd + skew_pair_block(aoverc, n);
}

Integer logical_dimension(const GeneralLcaCode &code) {
    Integer prod_c = 1;
    for (const auto &c : code.cvec) {
        prod_c *= c;
    }
    Rational k1 = abs(pfaffian(code.theta - code.z)) * prod_c;
    Rational k2 = prod_c;
    for (const auto &t : code.t) {
        k2 *= t;
    }
    Integer mp = 1;
    for (size_t i = 0; i < code.p; i++) {
        mp *= code.m;
    }
    k2 /= mp;
    if (k1 != k2 || !is_integer(k1) || k1 < 1) {
        throw std::logic_error("logical_dimension: Pfaffian and Smith-form formulas disagree");
    }
    if (code.p == 1 && code.k == 1) {
        // Theta = theta J and Z = zeta J: K = |c theta - c zeta| with c the denominator of zeta.
        Rational zeta = code.z(0, 1);
        Rational k3 = abs(Rational(zeta.get_den()) * (code.theta(0, 1) - zeta));
        if (k3 != k1) {
            throw std::logic_error("logical_dimension: single-mode formula disagrees");
        }
    }
    return to_integer(k1);
}

GeneralLcaCode build_general(const RationalMatrix &theta, const RationalMatrix &z, const BuildHints &hints) {
    size_t n = theta.rows();
    if (n == 0 || n % 2 != 0 || theta.cols() != n || z.rows() != n || z.cols() != n) {
        throw std::invalid_argument("build_general: Theta and Z must be square of the same even dimension");
    }
    if (!theta.is_integer()) {
        throw std::invalid_argument("build_general: Theta must be an integer matrix");
    }
    if (!theta.is_antisymmetric() || !z.is_antisymmetric()) {
        throw std::invalid_argument("build_general: Theta and Z must be anti-symmetric");
    }
    RationalMatrix diff = theta - z;
    if (det(diff) == 0) {
        throw std::domain_error("build_general: construction requires invertibility of Theta - Z");
    }

    GeneralLcaCode code;
    code.p = n / 2;
    code.theta = theta;
    code.z = z;
    code.m = z.common_denominator();
    RationalMatrix mz = z * Rational(code.m);
    RationalMatrix mdiff = diff * Rational(code.m);

    if (hints.r) {
        if (!is_unimodular(*hints.r) || hints.r->rows() != n) {
            throw std::invalid_argument("build_general: R hint must be unimodular of size 2p");
        }
        RationalMatrix rinv = inverse(*hints.r);
        auto h = read_canonical(rinv.transpose() * mz * rinv);
        if (!h) {
            throw std::invalid_argument("build_general: R hint does not bring m Z to canonical form");
        }
        code.r = *hints.r;
        code.h = *h;
    } else {
        AltSmithDecomposition dec = alt_smith(mz);
        code.r = inverse(dec.transform);
        code.h = dec.h;
    }
    code.k = code.h.size();

    if (hints.q) {
        if (!is_unimodular(*hints.q) || hints.q->rows() != n) {
            throw std::invalid_argument("build_general: Q hint must be unimodular of size 2p");
        }
        RationalMatrix qinv = inverse(*hints.q);
        auto t = read_canonical(qinv.transpose() * mdiff * qinv);
        if (!t || t->size() != code.p) {
            throw std::invalid_argument("build_general: Q hint does not bring m(Theta - Z) to canonical form");
        }
        code.q = *hints.q;
        code.t = *t;
    } else {
        AltSmithDecomposition dec = alt_smith(mdiff);
        if (dec.k != code.p) {
            throw std::logic_error("build_general: full-rank alternating form has a zero block");
        }
        code.q = inverse(dec.transform);
        code.t = dec.h;
    }

    size_t p = code.p, k = code.k;
    for (size_t j = 0; j < k; j++) {
        Integer g = gcd(code.h[j], code.m);
        code.cvec.push_back(code.m / g);
        code.dvec.push_back(code.h[j] / g);
        // a d + b c = 1 from the canonical b c - a' d = 1 with a = -a'.
        BezoutPair bp = bezout_pair(code.cvec[j], code.dvec[j]);
        code.avec.push_back(-bp.a);
        code.bvec.push_back(bp.b);
    }

    // T_cv = [[0, diag sqrt(t/m)], [-diag sqrt(t/m), 0]] Q.
    std::vector<Rational> rad(n);
    for (size_t i = 0; i < p; i++) {
        rad[i] = rad[p + i] = ratio(code.t[i], code.m);
    }
    RationalMatrix rot(n, n);
    for (size_t i = 0; i < p; i++) {
        rot(i, p + i) = 1;
        rot(p + i, i) = -1;
    }
    code.t_cv = ScaledMatrix(rad, rot * code.q);

    // T_dv = [[diag d, 0, 0], [0, I_k, 0]] R.
    RationalMatrix md(2 * k, n);
    for (size_t j = 0; j < k; j++) {
        md(j, j) = code.dvec[j];
        md(k + j, k + j) = 1;
    }
    code.t_dv = md * code.r;

    // S_cv = J T_cv^-T R^T C with C = diag(c^-1, c^-1, -I).
    std::vector<Rational> cinv;
    for (size_t j = 0; j < k; j++) {
        cinv.push_back(ratio(1, code.cvec[j]));
    }
    RationalMatrix cd = doubled_diagonal(cinv, n, -1);
    code.s_cv = multiply(j_cv(p), multiply(code.t_cv.inverse().transpose(), code.r.transpose() * cd));

    // S_dv = [[0, -I_k, 0], [diag a, 0, 0]].
    code.s_dv = RationalMatrix(2 * k, n);
    for (size_t j = 0; j < k; j++) {
        code.s_dv(j, k + j) = -1;
        code.s_dv(k + j, j) = code.avec[j];
    }

    code.dual = dual_torus(code);

    RationalMatrix rinv_t = inverse(code.r).transpose();
    code.g.a = skew_pair_block(as_rationals(code.avec), n) * rinv_t;
    code.g.b = doubled_diagonal(as_rationals(code.bvec), n, -1) * code.r;
    code.g.c = doubled_diagonal(as_rationals(code.cvec), n, -1) * rinv_t;
    code.g.d = skew_pair_block(as_rationals(code.dvec), n) * code.r;

    code.K = logical_dimension(code);

    VerifyReport report = verify(code);
    if (!report.ok()) {
        throw std::logic_error("build_general: constructed code failed verification:\n" + report.str());
    }
    return code;
}

GeneralLcaCode to_general(const SimpleLcaCode &code) {
    RationalMatrix theta(2, 2), z(2, 2);
    theta(0, 1) = code.theta;
    theta(1, 0) = -code.theta;
    z(0, 1) = -ratio(code.d, code.c);
    z(1, 0) = ratio(code.d, code.c);
    return build_general(theta, z);
}

bool VerifyReport::ok() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

std::string VerifyReport::str() const {
    std::ostringstream ss;
    for (const auto &c : checks) {
        ss << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) {
            ss << ": " << c.detail;
        }
        ss << "\n";
    }
    return ss.str();
}

VerifyReport verify(const GeneralLcaCode &code) {
    VerifyReport report;
    auto run = [&](const std::string &name, auto &&fn) {
        VerifyCheck check{name, false, ""};
        try {
            check.passed = fn();
        } catch (const std::exception &e) {
            check.detail = e.what();
        }
        report.checks.push_back(check);
    };
    const RationalMatrix jc = j_cv(code.p);

    run("integer_qudit_matrices", [&] { return code.t_dv.is_integer() && code.s_dv.is_integer(); });
    run("encoder", [&] {
        return pair(code.t_cv, code.t_cv, jc) + qudit_form_of(code.t_dv, code.t_dv, code.cvec) == code.theta;
    });
    run("qudit_part", [&] { return qudit_form_of(code.t_dv, code.t_dv, code.cvec) == code.z; });
    run("dual_torus", [&] {
        RationalMatrix sjs = pair(code.s_cv, code.s_cv, jc) + qudit_form_of(code.s_dv, code.s_dv, code.cvec);
        return sjs == -code.dual;
    });
    run("dual_closed_form", [&] { return dual_torus(code) == code.dual; });
    run("morita_action", [&] { return mobius(code.g, code.theta) == code.dual; });
    run("so_nn", [&] { return is_so_nn(code.g); });
    run("logical_commutation", [&] {
        RationalMatrix tjs = pair(code.t_cv, code.s_cv, jc) + qudit_form_of(code.t_dv, code.s_dv, code.cvec);
        return tjs.is_integer();
    });
    run("dimension", [&] { return logical_dimension(code) == code.K; });
    return report;
}

VerifyReport verify(const SimpleLcaCode &code) {
    VerifyReport report;
    auto run = [&](const std::string &name, auto &&fn) {
        VerifyCheck check{name, false, ""};
        try {
            check.passed = fn();
        } catch (const std::exception &e) {
            check.detail = e.what();
        }
        report.checks.push_back(check);
    };
    run("parameters", [&] { return code.c >= 1 && gcd(code.c, code.d) == 1; });
    run("dimension", [&] { return code.K > 0 && code.K == code.c * code.theta + code.d; });
    run("bezout", [&] { return code.b * code.c - code.a * code.d == 1; });
    run("unit", [&] { return code.unit_sq == ratio(1, code.K * code.c); });
    run("general", [&] {
        GeneralLcaCode g = to_general(code);
        return verify(g).ok() && g.K == code.K;
    });
    return report;
}

GeneralLcaCode standard_form_multi(
    const std::vector<Integer> &cvec, const std::vector<Integer> &dvec, const std::vector<Integer> &thetavec) {
    size_t p = cvec.size();
    if (p == 0 || dvec.size() != p || thetavec.size() != p) {
        throw std::invalid_argument("standard_form_multi: cvec, dvec and thetavec must have the same positive length");
    }
    RationalMatrix theta(2 * p, 2 * p), z(2 * p, 2 * p);
    bool hintable = true;
    for (size_t j = 0; j < p; j++) {
        if (cvec[j] < 1 || gcd(cvec[j], dvec[j]) != 1) {
            throw std::invalid_argument("standard_form_multi: need c_j >= 1 and gcd(c_j, d_j) = 1");
        }
        Integer kj = cvec[j] * thetavec[j] + dvec[j];
        if (kj == 0) {
            throw std::invalid_argument("standard_form_multi: c_j theta_j + d_j = 0");
        }
        theta(j, p + j) = thetavec[j];
        theta(p + j, j) = -thetavec[j];
        z(j, p + j) = -ratio(dvec[j], cvec[j]);
        z(p + j, j) = ratio(dvec[j], cvec[j]);
        hintable = hintable && dvec[j] > 0 && kj > 0;
    }
    if (!hintable) {
        return build_general(theta, z);
    }
    // R = diag(-I, I) and Q = [[0, -I], [I, 0]] give T_cv = I_2 (x) diag sqrt(theta + d/c)
    // and T_dv = (-diag d) (+) I.
    BuildHints hints;
    RationalMatrix r = RationalMatrix::identity(2 * p);
    RationalMatrix q(2 * p, 2 * p);
    for (size_t j = 0; j < p; j++) {
        r(j, j) = -1;
        q(j, p + j) = -1;
        q(p + j, j) = 1;
    }
    hints.r = r;
    hints.q = q;
    return build_general(theta, z, hints);
}

GeneralLcaCode apply_gaussian(const GeneralLcaCode &code, const RationalMatrix &v) {
    size_t n = 2 * code.p;
    if (v.rows() != n || v.cols() != n) {
        throw std::invalid_argument("apply_gaussian: V must be 2p x 2p");
    }
    RationalMatrix jc = j_cv(code.p);
    if (v.transpose() * jc * v != jc) {
        throw std::invalid_argument("apply_gaussian: V is not symplectic");
    }
    GeneralLcaCode out = code;
    out.t_cv = multiply(v, code.t_cv);
    out.s_cv = multiply(v, code.s_cv);
    return out;
}

PrepSymplectic prep_symplectic(const GeneralLcaCode &from, const GeneralLcaCode &to,
                               const std::optional<RationalMatrix> &r, const std::optional<RationalMatrix> &l) {
    if (from.p != to.p || from.cvec != to.cvec) {
        throw std::invalid_argument("prep_symplectic: codes differ in mode count or qudit dimensions");
    }
    size_t n = 2 * from.p, k2 = 2 * from.k;
    RationalMatrix rm = r ? *r : RationalMatrix::identity(n);
    RationalMatrix lm = l ? *l : RationalMatrix::identity(k2);
    if (rm.rows() != n || !is_unimodular(rm)) {
        throw std::invalid_argument("prep_symplectic: R must be unimodular of size 2p");
    }
    if (lm.rows() != k2 || lm.cols() != k2 || !lm.is_integer()) {
        throw std::invalid_argument("prep_symplectic: L must be an integer 2k x 2k matrix");
    }
    RationalMatrix rt = rm.transpose();
    if (rt * to.theta * rm != from.theta || rt * to.z * rm != from.z) {
        throw std::invalid_argument("prep_symplectic: codes are not standard-form-equivalent under R");
    }
    PrepSymplectic out;
    out.l = lm;
    try {
        out.s_cv = multiply(multiply(to.t_cv, rm), from.t_cv.inverse());
    } catch (const std::domain_error &e) {
        throw std::invalid_argument(std::string("prep_symplectic: ") + e.what());
    }
    RationalMatrix jc = j_cv(from.p);
    if (pair(out.s_cv, out.s_cv, jc) != jc) {
        throw std::logic_error("prep_symplectic: S_cv is not symplectic");
    }
    RationalMatrix gap = lm * from.t_dv - to.t_dv * rm;
    if (k2 > 0 && !mod_reduce(gap, from.cvec).is_zero()) {
        throw std::invalid_argument("prep_symplectic: L T_dv(from) != T_dv(to) R mod c");
    }
    return out;
}

}  // namespace lca
