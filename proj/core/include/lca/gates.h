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

#ifndef LCA_GATES_H
#define LCA_GATES_H

#include <optional>
#include <vector>

#include "lca/codes.h"
#include "lca/heisenberg.h"
#include "lca/symplectic.h"

namespace lca {

/// Block-diagonal Gaussian-Clifford gate V_cv (+) V_dv. There is no CV-qudit mixing block.
struct GaussianClifford {
    ScaledMatrix v_cv;
    RationalMatrix v_dv;
};

/// Integer W with |det W| = 1 and W^T Theta W = Theta. False for malformed input.
bool is_automorphism(const RationalMatrix &w, const RationalMatrix &theta);

/// d divides the lower-left entry. Throws std::invalid_argument unless W is in Sp(2, Z).
bool in_gamma0(const RationalMatrix &w, const Integer &d);

/// For a simple code: V_cv = W in u'-units and V_dv = T_dv W T_dv^-1 = [[w11, -d w12], [-w21/d, w22]].
/// Throws std::invalid_argument when W is not an automorphism of the code's Theta and Z, or
/// when d does not divide w21 ("W not realizable as a qudit Clifford").
GaussianClifford synthesize(const SimpleLcaCode &code, const RationalMatrix &w);

/// Multi-mode codes with every d_j = 1: V_cv = T_cv W T_cv^-1 and V_dv = T_dv W T_dv^+ with the
/// integer right inverse T_dv^+ = R^-1 [[I], [0]]. W must preserve Theta and Z.
GaussianClifford synthesize(const GeneralLcaCode &code, const RationalMatrix &w);

/// Rotation x -> p, p -> -x on the mode and an exact lift of X -> Z^a, Z -> X^d on the qudit.
/// Throws std::logic_error if the result fails verify_gate or the X-bar -> Z-bar^dagger,
/// Z-bar -> X-bar check.
GaussianClifford hadamard(const SimpleLcaCode &code);

struct GateReport {
    std::vector<VerifyCheck> checks;
    /// Induced logical action mod K on coordinate vectors in the (Z-bar, X-bar) basis. Present
    /// for simple codes when the gate preserves the lattice.
    std::optional<RationalMatrix> logical_action;

    bool ok() const;
};

/// Exact symplectic checks on both blocks and lattice preservation of every stabilizer
/// generator; never throws.
GateReport verify_gate(const SimpleLcaCode &code, const GaussianClifford &v);
GateReport verify_gate(const GeneralLcaCode &code, const GaussianClifford &v);

/// Image of a displacement under the gate (phases are not tracked).
HybridDisplacement apply_gate(const LatticeFrame &frame, const GaussianClifford &v, const HybridDisplacement &x);

/// (W^-1)^T mod K, cross-checked against the logical classes of the images of X-bar and Z-bar
/// under synthesize(code, W). Throws std::logic_error on disagreement.
RationalMatrix logical_action(const SimpleLcaCode &code, const RationalMatrix &w);

/// Integer W with det W = 1, d | W(1, 0) and W = w_mod mod c. Throws std::invalid_argument
/// unless det(w_mod) = 1 mod c, gcd(c, d) = 1 and c, d >= 1.
RationalMatrix lift_sp2_modc(const RationalMatrix &w_mod, const Integer &c, const Integer &d);

}  // namespace lca

#endif
