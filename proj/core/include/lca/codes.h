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

#ifndef LCA_CODES_H
#define LCA_CODES_H

#include <optional>
#include <string>
#include <vector>

#include "lca/matrix.h"
#include "lca/rational.h"
#include "lca/symplectic.h"

namespace lca {

/// Integer generator columns of a lattice in the covering space, together with the units
/// needed to pair them. Coordinates are (m_cv[p], s_cv[p], m_dv[k], s_dv[k]) with CV entries
/// in units of sqrt(unit_sq) (times sqrt(2 pi) physically).
struct LatticeFrame {
    size_t p = 0;
    std::vector<Integer> cvec;
    Rational unit_sq;
    /// Columns generate the stabilizer lattice.
    RationalMatrix stabilizers;
    /// Column j is the j-th logical generator: X-bar then Z-bar.
    RationalMatrix logicals;
    Integer K;

    size_t k() const {
        return cvec.size();
    }
    size_t dim() const {
        return 2 * p + 2 * cvec.size();
    }
};

/// A single-mode, single-qudit code with stabilizers S_X = (K, 0 | -d, 0), S_Z = (0, K | 0, 1).
struct SimpleLcaCode {
    Integer c;
    /// Stored after sign normalization so that K = c*theta + d > 0.
    Integer d;
    Integer theta;
    /// b*c - a*d = 1.
    Integer a;
    Integer b;
    Integer K;
    /// u'^2 = 1/(K c).
    Rational unit_sq;
    /// True when the requested (theta, d) had c*theta + d < 0 and both signs were flipped.
    bool flipped = false;

    LatticeFrame frame() const;
};

/// Throws std::invalid_argument when gcd(c, d) != 1, c < 1, or c*theta + d = 0.
SimpleLcaCode simple_code(const Integer &c, const Integer &d, const Integer &theta);

/// Pure-displacement distance squared in units of 2 pi: c/K.
Rational distance_simple(const SimpleLcaCode &code);

struct GeneralLcaCode {
    size_t p = 0;
    size_t k = 0;
    Integer m;
    RationalMatrix theta;
    RationalMatrix z;
    /// m (Theta - Z) = Q^T [[0, diag t], [-diag t, 0]] Q.
    RationalMatrix q;
    /// m Z = R^T canonical_alt_form(2p, h) R.
    RationalMatrix r;
    std::vector<Integer> t;
    std::vector<Integer> h;
    std::vector<Integer> cvec, dvec, avec, bvec;
    ScaledMatrix t_cv;
    RationalMatrix t_dv;
    ScaledMatrix s_cv;
    RationalMatrix s_dv;
    RationalMatrix dual;
    MoritaElement g;
    Integer K;

    SymplecticForm form() const {
        return SymplecticForm::make(p, cvec);
    }
};

/// Optional unimodular matrices replacing the Smith-form ones. A hint for R needs
/// R^-T (m Z) R^-1 = canonical_alt_form(2p, h) with h > 0 (no divisibility required), and a
/// hint for Q needs Q^-T m(Theta - Z) Q^-1 = [[0, diag t], [-diag t, 0]] with t > 0.
struct BuildHints {
    std::optional<RationalMatrix> r;
    std::optional<RationalMatrix> q;
};

/// Throws std::invalid_argument for malformed input (shape, non-integer Theta, bad hint) and
/// std::domain_error when Theta - Z is singular.
GeneralLcaCode build_general(const RationalMatrix &theta, const RationalMatrix &z, const BuildHints &hints = {});

/// (Theta, Z) = (theta J, -(d/c) J) of a simple code.
GeneralLcaCode to_general(const SimpleLcaCode &code);

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool ok() const;
    std::string str() const;
};

/// Exact checks on the stored matrices; never throws.
VerifyReport verify(const GeneralLcaCode &code);
/// Parameter consistency of a stored simple code plus verify() of its general form.
VerifyReport verify(const SimpleLcaCode &code);

/// |Pf(Theta - Z)| prod c_j, cross-checked against prod(c_j t_j)/m^p (and |c theta + d| when
/// p = k = 1). Throws std::logic_error on disagreement.
Integer logical_dimension(const GeneralLcaCode &code);

/// Closed-form dual torus C R (Theta - Z)^-1 R^T C + [[0, -a/c, 0], [a/c, 0, 0], [0, 0, 0]].
RationalMatrix dual_torus(const GeneralLcaCode &code);

/// Product code with Theta = [[0, diag theta], [-diag theta, 0]] and Z = [[0, -diag(d/c)], [diag(d/c), 0]].
GeneralLcaCode standard_form_multi(
    const std::vector<Integer> &cvec, const std::vector<Integer> &dvec, const std::vector<Integer> &thetavec);

/// Code with T_cv and S_cv replaced by V T_cv and V S_cv. Throws std::invalid_argument unless V
/// is symplectic.
GeneralLcaCode apply_gaussian(const GeneralLcaCode &code, const RationalMatrix &v);

struct PrepSymplectic {
    ScaledMatrix s_cv;
    RationalMatrix l;
};

/// Block-diagonal symplectic taking the lattice of `from` onto the lattice of `to`:
/// S_cv = T_cv(to) R T_cv(from)^-1 and L T_dv(from) = T_dv(to) R mod c. R and L default to the
/// identity. Throws std::invalid_argument when the codes are not related this way.
PrepSymplectic prep_symplectic(const GeneralLcaCode &from, const GeneralLcaCode &to,
                               const std::optional<RationalMatrix> &r = std::nullopt,
                               const std::optional<RationalMatrix> &l = std::nullopt);

}  // namespace lca

#endif
