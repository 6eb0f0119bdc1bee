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

#ifndef LCA_HEISENBERG_H
#define LCA_HEISENBERG_H

#include <optional>
#include <utility>
#include <vector>

#include "lca/codes.h"
#include "lca/rational.h"

namespace lca {

/// Phase-exact displacement-Pauli operator e^{2 pi i phase} D(m_cv, s_cv) (x) Z^{s_dv} X^{m_dv}.
/// CV coordinates are in the frame's unit; dv coordinates are kept reduced mod c.
struct HybridDisplacement {
    std::vector<Rational> m_cv, s_cv;
    std::vector<Integer> m_dv, s_dv;
    /// In [0, 1).
    Rational phase;

    bool operator==(const HybridDisplacement &o) const;
};

/// Same layout with real CV coordinates, for noise.
struct NoisyDisplacement {
    std::vector<double> m_cv, s_cv;
    std::vector<Integer> m_dv, s_dv;
};

HybridDisplacement identity_displacement(const LatticeFrame &frame);

/// Element with coordinates (m_cv, s_cv, m_dv, s_dv) stacked in one vector of length frame.dim().
/// Throws std::invalid_argument on a length mismatch or non-integer dv entries.
HybridDisplacement from_coordinates(const LatticeFrame &frame, const std::vector<Rational> &coords,
                                    const Rational &phase = 0);
std::vector<Rational> coordinates(const HybridDisplacement &x);

/// Unreduced <x, J y> = (m1.s2 - s1.m2) unit_sq + sum_j (m1 s2 - s1 m2)_j / c_j.
Rational pairing(const HybridDisplacement &x, const HybridDisplacement &y, const LatticeFrame &frame);
/// <x, J y> mod 1.
Rational phase_inner(const HybridDisplacement &x, const HybridDisplacement &y, const LatticeFrame &frame);
/// Real <x, J y>, unreduced.
double phase_inner(const NoisyDisplacement &x, const HybridDisplacement &y, const LatticeFrame &frame);

/// x y: coordinates add and the phase picks up -<x, J' y>, where J' keeps the positive
/// entries of J.
HybridDisplacement compose(const HybridDisplacement &x, const HybridDisplacement &y, const LatticeFrame &frame);

/// U_l = A(l) D(T l) with A(l) = -<T l, J' T l>/2 mod 1. T is the frame's stabilizer matrix.
HybridDisplacement stabilizer_element(const LatticeFrame &frame, const std::vector<Integer> &l);

/// Some l with T l equal to the coordinates of x (CV exactly, dv mod c), or nullopt.
std::optional<std::vector<Integer>> lattice_member(const LatticeFrame &frame, const HybridDisplacement &x);

/// (alpha, beta) mod K with x = alpha X-bar + beta Z-bar modulo the stabilizer lattice. Requires
/// a frame with exactly two logical columns. Throws std::invalid_argument when x is not in the
/// span of logicals and stabilizers.
std::pair<Integer, Integer> logical_class(const LatticeFrame &frame, const HybridDisplacement &x);

}  // namespace lca

#endif
