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

#include "lca/gates.h"

#include <functional>
#include <stdexcept>

#include "lca/exactmath.h"

namespace lca {

namespace {

RationalMatrix scalar_j(const Integer &theta) {
    RationalMatrix m(2, 2);
    m(0, 1) = theta;
    m(1, 0) = -theta;
    return m;
}

const RationalMatrix &swap2() {
    static const RationalMatrix s{{0, 1}, {1, 0}};
    return s;
}

void run_check(std::vector<VerifyCheck> *checks, const std::string &name, const std::function<bool()> &fn) {
    VerifyCheck check{name, false, ""};
    try {
        check.passed = fn();
    } catch (const std::exception &e) {
        check.detail = e.what();
    }
    checks->push_back(check);
}

HybridDisplacement column_of(const LatticeFrame &frame, const RationalMatrix &m, size_t col) {
    std::vector<Rational> v;
    for (size_t r = 0; r < m.rows(); r++) {
        v.push_back(m(r, col));
    }
    return from_coordinates(frame, v);
}

}  // namespace

bool GateReport::ok() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

bool is_automorphism(const RationalMatrix &w, const RationalMatrix &theta) {
    if (w.rows() != w.cols() || w.rows() != theta.rows() || theta.rows() != theta.cols() || !w.is_integer()) {
        return false;
    }
    Rational dt = det(w);
    if (dt != 1 && dt != -1) {
        return false;
    }
    return w.transpose() * theta * w == theta;
}

bool in_gamma0(const RationalMatrix &w, const Integer &d) {
    if (!is_integer_symplectic(w, 1)) {
        throw std::invalid_argument("in_gamma0: W is not in Sp(2, Z)");
    }
    Integer lower = to_integer(w(1, 0));
    if (d == 0) {
        return lower == 0;
    }
    return mod_floor(lower, abs(d)) == 0;
}

HybridDisplacement apply_gate(const LatticeFrame &frame, const GaussianClifford &v, const HybridDisplacement &x) {
    RationalMatrix vcv = v.v_cv.to_rational();
    size_t p = frame.p, k = frame.k();
    std::vector<Rational> cv(x.m_cv);
    cv.insert(cv.end(), x.s_cv.begin(), x.s_cv.end());
    std::vector<Rational> dv;
    for (const auto &z : x.m_dv) {
        dv.emplace_back(z);
    }
    for (const auto &z : x.s_dv) {
        dv.emplace_back(z);
    }
    std::vector<Rational> out = vcv * cv;
    if (k > 0) {
        std::vector<Rational> dv_out = v.v_dv * dv;
        out.insert(out.end(), dv_out.begin(), dv_out.end());
    }
    if (out.size() != 2 * p + 2 * k) {
        throw std::invalid_argument("apply_gate: gate does not match the frame");
    }
    return from_coordinates(frame, out, x.phase);
}

GateReport verify_gate(const SimpleLcaCode &code, const GaussianClifford &v) {
    GateReport report;
    LatticeFrame frame = code.frame();
    run_check(&report.checks, "cv_symplectic", [&] { return pair(v.v_cv, v.v_cv, j_cv(1)) == j_cv(1); });
    run_check(&report.checks, "dv_symplectic", [&] {
        return v.v_dv.rows() == 2 && v.v_dv.cols() == 2 && is_mod_symplectic(v.v_dv, frame.cvec);
    });
    run_check(&report.checks, "stabilizer_images", [&] {
        for (size_t j = 0; j < frame.stabilizers.cols(); j++) {
            if (!lattice_member(frame, apply_gate(frame, v, column_of(frame, frame.stabilizers, j)))) {
                return false;
            }
        }
        return true;
    });
    if (!report.ok()) {
        return report;
    }
    run_check(&report.checks, "logical_images", [&] {
        // Column j holds the class of the image of logical j, in (X-bar, Z-bar) coordinates.
        RationalMatrix l(2, 2);
        for (size_t j = 0; j < 2; j++) {
            auto cls = logical_class(frame, apply_gate(frame, v, column_of(frame, frame.logicals, j)));
            l(0, j) = cls.first;
            l(1, j) = cls.second;
        }
        report.logical_action = mod_matrix(swap2() * l * swap2(), code.K);
        return true;
    });
    return report;
}

GateReport verify_gate(const GeneralLcaCode &code, const GaussianClifford &v) {
    GateReport report;
    RationalMatrix jc = j_cv(code.p);
    run_check(&report.checks, "cv_symplectic", [&] { return pair(v.v_cv, v.v_cv, jc) == jc; });
    run_check(&report.checks, "dv_symplectic", [&] {
        return code.k == 0 || (v.v_dv.rows() == 2 * code.k && is_mod_symplectic(v.v_dv, code.cvec));
    });
    run_check(&report.checks, "stabilizer_images", [&] {
        // The image of T e_i is T M e_i with M = T_cv^-1 V_cv T_cv; M must be integral and the
        // qudit parts must agree mod c.
        RationalMatrix m = multiply(multiply(code.t_cv.inverse(), v.v_cv), code.t_cv).to_rational();
        if (!m.is_integer()) {
            return false;
        }
        return code.k == 0 || mod_reduce(v.v_dv * code.t_dv - code.t_dv * m, code.cvec).is_zero();
    });
    return report;
}

GaussianClifford synthesize(const SimpleLcaCode &code, const RationalMatrix &w) {
    if (w.rows() != 2 || w.cols() != 2 || !is_automorphism(w, scalar_j(code.theta))) {
        throw std::invalid_argument("synthesize: W is not an automorphism of Theta");
    }
    if (det(w) != 1) {
        throw std::invalid_argument("synthesize: W does not preserve Z (det W = -1)");
    }
    GaussianClifford g;
    g.v_cv = ScaledMatrix::from_rational(w);
    if (code.c == 1) {
        g.v_dv = RationalMatrix::identity(2);
    } else {
        Integer w21 = to_integer(w(1, 0));
        if (mod_floor(w21, abs(code.d)) != 0) {
            throw std::invalid_argument("synthesize: W not realizable as a qudit Clifford (d does not divide w21)");
        }
        g.v_dv = RationalMatrix(2, 2);
        g.v_dv(0, 0) = w(0, 0);
        g.v_dv(0, 1) = -Rational(code.d) * w(0, 1);
        g.v_dv(1, 0) = -ratio(w21, code.d);
        g.v_dv(1, 1) = w(1, 1);
    }
    GateReport report = verify_gate(code, g);
    if (!report.ok()) {
        throw std::logic_error("synthesize: synthesized gate failed verification");
    }
    return g;
}

GaussianClifford synthesize(const GeneralLcaCode &code, const RationalMatrix &w) {
    for (const auto &d : code.dvec) {
        if (d != 1) {
            throw std::invalid_argument("synthesize: multi-mode synthesis requires every d_j = 1");
        }
    }
    size_t n = 2 * code.p, k = code.k;
    if (!is_automorphism(w, code.theta)) {
        throw std::invalid_argument("synthesize: W is not an automorphism of Theta");
    }
    if (w.transpose() * code.z * w != code.z) {
        throw std::invalid_argument("synthesize: W not realizable as a qudit Clifford (W does not preserve Z)");
    }
    GaussianClifford g;
    try {
        g.v_cv = multiply(multiply(code.t_cv, w), code.t_cv.inverse());
    } catch (const std::domain_error &e) {
        throw std::invalid_argument(std::string("synthesize: W mixes modes with incompatible radicands: ") + e.what());
    }
    RationalMatrix right_inverse(n, 2 * k);
    for (size_t i = 0; i < 2 * k; i++) {
        right_inverse(i, i) = 1;
    }
    right_inverse = inverse(code.r) * right_inverse;
    g.v_dv = code.t_dv * w * right_inverse;
    GateReport report = verify_gate(code, g);
    if (!report.ok()) {
        throw std::invalid_argument("synthesize: W not realizable as a qudit Clifford");
    }
    return g;
}

GaussianClifford hadamard(const SimpleLcaCode &code) {
    GaussianClifford g;
    g.v_cv = ScaledMatrix::from_rational(RationalMatrix{{0, -1}, {1, 0}});
    // X -> Z^a, Z -> X^d: det = -ad = 1 - bc, so lift to an exactly symplectic representative.
    RationalMatrix naive(2, 2);
    naive(0, 1) = code.d;
    naive(1, 0) = code.a;
    g.v_dv = lift_sp2_modc(mod_matrix(naive, code.c), code.c, 1);
    GateReport report = verify_gate(code, g);
    if (!report.ok() || !report.logical_action) {
        throw std::logic_error("hadamard: gate failed verification");
    }
    LatticeFrame frame = code.frame();
    auto x_image = logical_class(frame, apply_gate(frame, g, column_of(frame, frame.logicals, 0)));
    auto z_image = logical_class(frame, apply_gate(frame, g, column_of(frame, frame.logicals, 1)));
    if (x_image != std::make_pair(Integer(0), mod_floor(-1, code.K)) ||
        z_image != std::make_pair(mod_floor(1, code.K), Integer(0))) {
        throw std::logic_error("hadamard: logical action is not X-bar -> Z-bar^dagger, Z-bar -> X-bar");
    }
    return g;
}

RationalMatrix logical_action(const SimpleLcaCode &code, const RationalMatrix &w) {
    GateReport report = verify_gate(code, synthesize(code, w));
    RationalMatrix expected = mod_matrix(inverse(w).transpose(), code.K);
    if (!report.logical_action || *report.logical_action != expected) {
        throw std::logic_error("logical_action: classes of the logical images disagree with (W^-1)^T");
    }
    return expected;
}

RationalMatrix lift_sp2_modc(const RationalMatrix &w_mod, const Integer &c, const Integer &d) {
    if (w_mod.rows() != 2 || w_mod.cols() != 2 || !w_mod.is_integer()) {
        throw std::invalid_argument("lift_sp2_modc: expected a 2x2 integer matrix");
    }
    if (c < 1 || d < 1 || gcd(c, d) != 1) {
        throw std::invalid_argument("lift_sp2_modc: need c, d >= 1 with gcd(c, d) = 1");
    }
    Integer at = to_integer(w_mod(0, 0)), bt = to_integer(w_mod(0, 1));
    Integer gt = to_integer(w_mod(1, 0)), dt = to_integer(w_mod(1, 1));
    if (mod_floor(at * dt - bt * gt - 1, c) != 0) {
        throw std::invalid_argument("lift_sp2_modc: input is not in Sp(2, Z_c)");
    }
    if (c == 1) {
        return RationalMatrix::identity(2);
    }
    // gamma = gt mod c and 0 mod d by CRT; nonzero so that the coprimality search terminates.
    Integer cinv, unused;
    extended_gcd(c, d, &cinv, &unused);
    Integer gamma = mod_floor(gt, c) + c * mod_floor(-mod_floor(gt, c) * cinv, d);
    if (gamma == 0) {
        gamma = c * d;
    }
    // delta = dt + t c coprime to gamma; some t < |gamma| works since gcd(gt, dt, c) = 1.
    Integer delta = mod_floor(dt, c);
    Integer tries = 0;
    while (gcd(delta, gamma) != 1) {
        delta += c;
        if (++tries > abs(gamma) + 1) {
            throw std::logic_error("lift_sp2_modc: no coprime lower-right entry found");
        }
    }
    Integer x0, y0;
    extended_gcd(delta, gamma, &x0, &y0);
    // alpha0 delta - beta0 gamma = 1.
    Integer alpha0 = x0, beta0 = -y0;
    Integer x = alpha0 - at, y = beta0 - bt;
    Integer k = y * alpha0 - x * beta0;
    Integer alpha = alpha0 - k * gamma;
    Integer beta = beta0 - k * delta;
    RationalMatrix out = RationalMatrix::from_integer_rows({{alpha, beta}, {gamma, delta}});
    if (det(out) != 1 || mod_floor(gamma, d) != 0 || !mod_matrix(out - w_mod, c).is_zero()) {
        throw std::logic_error("lift_sp2_modc: lift failed its own checks");
    }
    return out;
}

}  // namespace lca
