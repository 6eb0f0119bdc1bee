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

#include "lca/heisenberg.h"

#include <stdexcept>

#include "lca/exactmath.h"

namespace lca {

namespace {

void require_shape(const HybridDisplacement &x, const LatticeFrame &frame) {
    if (x.m_cv.size() != frame.p || x.s_cv.size() != frame.p || x.m_dv.size() != frame.k() ||
        x.s_dv.size() != frame.k()) {
        throw std::invalid_argument("displacement does not match the frame's mode and qudit counts");
    }
}

// sum m1 s2 over CV (scaled) and dv (divided by c): the J' half of the pairing.
Rational upper_pairing(const HybridDisplacement &x, const HybridDisplacement &y, const LatticeFrame &frame) {
    Rational cv = 0;
    for (size_t i = 0; i < frame.p; i++) {
        cv += x.m_cv[i] * y.s_cv[i];
    }
    Rational out = cv * frame.unit_sq;
    for (size_t j = 0; j < frame.k(); j++) {
        out += ratio(x.m_dv[j] * y.s_dv[j], frame.cvec[j]);
    }
    return out;
}

// Generators plus c_j e_r for every dv row r, as one integer matrix.
RationalMatrix with_qudit_moduli(const RationalMatrix &gens, const LatticeFrame &frame) {
    size_t k = frame.k();
    RationalMatrix mod(frame.dim(), 2 * k);
    for (size_t r = 0; r < 2 * k; r++) {
        mod(2 * frame.p + r, r) = frame.cvec[r % k];
    }
    return hstack(gens, mod);
}

// Integer right-hand side, or nullopt if a CV coordinate is not integral.
std::optional<std::vector<Integer>> integer_coordinates(const HybridDisplacement &x) {
    std::vector<Integer> out;
    for (const auto *v : {&x.m_cv, &x.s_cv}) {
        for (const auto &q : *v) {
            if (!is_integer(q)) {
                return std::nullopt;
            }
            out.push_back(to_integer(q));
        }
    }
    out.insert(out.end(), x.m_dv.begin(), x.m_dv.end());
    out.insert(out.end(), x.s_dv.begin(), x.s_dv.end());
    return out;
}

}  // namespace

bool HybridDisplacement::operator==(const HybridDisplacement &o) const {
    return m_cv == o.m_cv && s_cv == o.s_cv && m_dv == o.m_dv && s_dv == o.s_dv && phase == o.phase;
}

HybridDisplacement identity_displacement(const LatticeFrame &frame) {
    HybridDisplacement x;
    x.m_cv.assign(frame.p, 0);
    x.s_cv.assign(frame.p, 0);
    x.m_dv.assign(frame.k(), 0);
    x.s_dv.assign(frame.k(), 0);
    x.phase = 0;
    return x;
}

HybridDisplacement from_coordinates(const LatticeFrame &frame, const std::vector<Rational> &coords,
                                    const Rational &phase) {
    if (coords.size() != frame.dim()) {
        throw std::invalid_argument("from_coordinates: expected " + std::to_string(frame.dim()) + " coordinates");
    }
    size_t p = frame.p, k = frame.k();
    HybridDisplacement x;
    x.m_cv.assign(coords.begin(), coords.begin() + p);
    x.s_cv.assign(coords.begin() + p, coords.begin() + 2 * p);
    for (size_t j = 0; j < 2 * k; j++) {
        const Rational &q = coords[2 * p + j];
        if (!is_integer(q)) {
            throw std::invalid_argument("from_coordinates: qudit coordinates must be integers");
        }
        Integer v = mod_floor(to_integer(q), frame.cvec[j % k]);
        (j < k ? x.m_dv : x.s_dv).push_back(v);
    }
    x.phase = frac(phase);
    return x;
}

std::vector<Rational> coordinates(const HybridDisplacement &x) {
    std::vector<Rational> out(x.m_cv);
    out.insert(out.end(), x.s_cv.begin(), x.s_cv.end());
    for (const auto &v : x.m_dv) {
        out.emplace_back(v);
    }
    for (const auto &v : x.s_dv) {
        out.emplace_back(v);
    }
    return out;
}

Rational pairing(const HybridDisplacement &x, const HybridDisplacement &y, const LatticeFrame &frame) {
    require_shape(x, frame);
    require_shape(y, frame);
    return upper_pairing(x, y, frame) - upper_pairing(y, x, frame);
}

Rational phase_inner(const HybridDisplacement &x, const HybridDisplacement &y, const LatticeFrame &frame) {
    return frac(pairing(x, y, frame));
}

double phase_inner(const NoisyDisplacement &x, const HybridDisplacement &y, const LatticeFrame &frame) {
    require_shape(y, frame);
    if (x.m_cv.size() != frame.p || x.s_cv.size() != frame.p || x.m_dv.size() != frame.k() ||
        x.s_dv.size() != frame.k()) {
        throw std::invalid_argument("noisy displacement does not match the frame");
    }
    double cv = 0;
    for (size_t i = 0; i < frame.p; i++) {
        cv += x.m_cv[i] * y.s_cv[i].get_d() - x.s_cv[i] * y.m_cv[i].get_d();
    }
    double out = cv * frame.unit_sq.get_d();
    for (size_t j = 0; j < frame.k(); j++) {
        Integer num = x.m_dv[j] * y.s_dv[j] - x.s_dv[j] * y.m_dv[j];
        out += ratio(num, frame.cvec[j]).get_d();
    }
    return out;
}

HybridDisplacement compose(const HybridDisplacement &x, const HybridDisplacement &y, const LatticeFrame &frame) {
    require_shape(x, frame);
    require_shape(y, frame);
    HybridDisplacement out = x;
    for (size_t i = 0; i < frame.p; i++) {
        out.m_cv[i] += y.m_cv[i];
        out.s_cv[i] += y.s_cv[i];
    }
    for (size_t j = 0; j < frame.k(); j++) {
        out.m_dv[j] = mod_floor(x.m_dv[j] + y.m_dv[j], frame.cvec[j]);
        out.s_dv[j] = mod_floor(x.s_dv[j] + y.s_dv[j], frame.cvec[j]);
    }
    out.phase = frac(x.phase + y.phase - upper_pairing(x, y, frame));
    return out;
}

HybridDisplacement stabilizer_element(const LatticeFrame &frame, const std::vector<Integer> &l) {
    if (l.size() != frame.stabilizers.cols()) {
        throw std::invalid_argument("stabilizer_element: l has the wrong length");
    }
    std::vector<Rational> lq(l.begin(), l.end());
    RationalMatrix v = frame.stabilizers * RationalMatrix::column(lq);
    // The phase uses the unreduced qudit coordinates; reduction afterwards is exact for Z^s X^m.
    size_t p = frame.p, k = frame.k();
    HybridDisplacement raw;
    for (size_t i = 0; i < p; i++) {
        raw.m_cv.push_back(v(i, 0));
        raw.s_cv.push_back(v(p + i, 0));
    }
    for (size_t j = 0; j < k; j++) {
        raw.m_dv.push_back(to_integer(v(2 * p + j, 0)));
        raw.s_dv.push_back(to_integer(v(2 * p + k + j, 0)));
    }
    Rational a = -upper_pairing(raw, raw, frame) / 2;
    HybridDisplacement out = raw;
    for (size_t j = 0; j < k; j++) {
        out.m_dv[j] = mod_floor(raw.m_dv[j], frame.cvec[j]);
        out.s_dv[j] = mod_floor(raw.s_dv[j], frame.cvec[j]);
    }
    out.phase = frac(a);
    return out;
}

std::optional<std::vector<Integer>> lattice_member(const LatticeFrame &frame, const HybridDisplacement &x) {
    require_shape(x, frame);
    auto rhs = integer_coordinates(x);
    if (!rhs) {
        return std::nullopt;
    }
    auto sol = solve_integer(with_qudit_moduli(frame.stabilizers, frame), *rhs);
    if (!sol) {
        return std::nullopt;
    }
    sol->resize(frame.stabilizers.cols());
    return sol;
}

std::pair<Integer, Integer> logical_class(const LatticeFrame &frame, const HybridDisplacement &x) {
    require_shape(x, frame);
    if (frame.logicals.cols() != 2) {
        throw std::invalid_argument("logical_class: frame must have exactly two logical generators");
    }
    auto rhs = integer_coordinates(x);
    std::optional<std::vector<Integer>> sol;
    if (rhs) {
        sol = solve_integer(with_qudit_moduli(hstack(frame.logicals, frame.stabilizers), frame), *rhs);
    }
    if (!sol) {
        throw std::invalid_argument("logical_class: not a logical-coset element");
    }
    return {mod_floor((*sol)[0], frame.K), mod_floor((*sol)[1], frame.K)};
}

}  // namespace lca
