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

#include <random>

#include "gtest/gtest.h"
#include "lca/exactmath.h"
#include "test_util.h"

using namespace lca;

namespace {

RationalMatrix scalar_j(const Rational &x) {
    RationalMatrix m(2, 2);
    m(0, 1) = x;
    m(1, 0) = -x;
    return m;
}

bool check_passed(const VerifyReport &report, const std::string &name) {
    for (const auto &c : report.checks) {
        if (c.name == name) {
            return c.passed;
        }
    }
    ADD_FAILURE() << "no check named " << name;
    return false;
}

}  // namespace

TEST(codes, simple_code_examples) {
    SimpleLcaCode qunaught = simple_code(1, 1, 0);
    EXPECT_EQ(qunaught.K, 1);

    SimpleLcaCode c32 = simple_code(3, 2, 0);
    EXPECT_EQ(c32.K, 2);
    EXPECT_EQ(c32.a, 1);
    EXPECT_EQ(c32.b, 1);
    EXPECT_EQ(c32.unit_sq, ratio(1, 6));

    EXPECT_EQ(simple_code(2, 1, 1).K, 3);
    EXPECT_EQ(simple_code(6, 5, 1).K, 11);

    EXPECT_THROW(simple_code(4, 2, 0), std::invalid_argument);
    EXPECT_THROW(simple_code(3, 3, -1), std::invalid_argument);
    EXPECT_THROW(simple_code(3, 0, 0), std::invalid_argument);
}

TEST(codes, simple_code_sign_flip) {
    SimpleLcaCode code = simple_code(3, 2, -2);
    EXPECT_TRUE(code.flipped);
    EXPECT_EQ(code.K, 4);
    EXPECT_EQ(code.theta, 2);
    EXPECT_EQ(code.d, -2);
    EXPECT_EQ(code.b * code.c - code.a * code.d, 1);
}

TEST(codes, simple_code_invariants) {
    for (long c = 1; c <= 10; c++) {
        for (long d = -c; d <= 2 * c; d++) {
            if (gcd(Integer(c), Integer(d)) != 1) {
                continue;
            }
            for (long theta = -5; theta <= 5; theta++) {
                if (c * theta + d == 0) {
                    continue;
                }
                SimpleLcaCode code = simple_code(c, d, theta);
                ASSERT_EQ(code.b * code.c - code.a * code.d, 1);
                ASSERT_EQ(code.K, code.c * code.theta + code.d);
                ASSERT_EQ(abs(code.K), std::abs(c * theta + d));
                ASSERT_EQ(gcd(code.a * code.theta + code.b, code.K), 1);
            }
        }
    }
}

TEST(codes, distance_examples) {
    EXPECT_EQ(distance_simple(simple_code(1, 1, 1)), ratio(1, 2));
    EXPECT_EQ(distance_simple(simple_code(3, 2, 0)), ratio(3, 2));
    EXPECT_EQ(distance_simple(simple_code(2, 1, 0)), 2);
    // d_LCA^2 = c * d_GKP^2 with d_GKP^2 = 1/K.
    SimpleLcaCode code = simple_code(7, 3, 2);
    EXPECT_EQ(distance_simple(code), Rational(code.c) * ratio(1, code.K));
}

TEST(codes, build_general_reproduces_simple_code) {
    GeneralLcaCode code = build_general(scalar_j(0), scalar_j(ratio(-2, 3)));
    EXPECT_EQ(code.k, 1u);
    EXPECT_EQ(code.cvec, std::vector<Integer>{3});
    EXPECT_EQ(code.dvec, std::vector<Integer>{2});
    EXPECT_EQ(code.K, 2);
    EXPECT_TRUE(verify(code).ok());
}

TEST(codes, build_general_theta_one) {
    GeneralLcaCode code = build_general(scalar_j(1), scalar_j(ratio(-2, 3)));
    EXPECT_EQ(code.K, 5);
    EXPECT_EQ(code.dual, scalar_j(ratio(2, 5)));
    EXPECT_EQ(mobius(code.g, code.theta), scalar_j(ratio(2, 5)));
    EXPECT_EQ(dual_torus(code), scalar_j(ratio(2, 5)));
}

TEST(codes, build_general_gkp) {
    RationalMatrix theta{{0, 2, 1, 0}, {-2, 0, 0, 1}, {-1, 0, 0, 3}, {0, -1, -3, 0}};
    GeneralLcaCode code = build_general(theta, RationalMatrix(4, 4));
    EXPECT_EQ(code.k, 0u);
    EXPECT_EQ(code.dual, inverse(theta));
    EXPECT_TRUE(check_passed(verify(code), "morita_action"));
    EXPECT_EQ(code.K, abs(pfaffian(theta)));
    EXPECT_EQ(code.g.assembled(), direct_sum(RationalMatrix(4, 4), RationalMatrix(4, 4)) +
                                      RationalMatrix::from_rows([] {
                                          std::vector<std::vector<Rational>> rows(8, std::vector<Rational>(8));
                                          for (size_t i = 0; i < 4; i++) {
                                              rows[i][4 + i] = -1;
                                              rows[4 + i][i] = -1;
                                          }
                                          return rows;
                                      }()));
}

TEST(codes, build_general_errors) {
    EXPECT_THROW(build_general(scalar_j(0), RationalMatrix(2, 2)), std::domain_error);
    EXPECT_THROW(build_general(scalar_j(ratio(1, 2)), scalar_j(1)), std::invalid_argument);
    EXPECT_THROW(build_general(RationalMatrix(2, 2), RationalMatrix(4, 4)), std::invalid_argument);
    EXPECT_THROW(build_general(RationalMatrix{{1, 0}, {0, 1}}, scalar_j(1)), std::invalid_argument);
}

TEST(codes, verify_flags_corruption) {
    GeneralLcaCode code = build_general(scalar_j(1), scalar_j(ratio(-2, 3)));
    GeneralLcaCode bad = code;
    bad.t_dv(0, 0) += 1;
    VerifyReport report = verify(bad);
    EXPECT_FALSE(report.ok());
    EXPECT_FALSE(check_passed(report, "encoder"));

    bad = code;
    bad.dual(0, 1) += 1;
    bad.dual(1, 0) -= 1;
    report = verify(bad);
    EXPECT_FALSE(check_passed(report, "dual_torus"));
    EXPECT_FALSE(check_passed(report, "morita_action"));

    bad = code;
    bad.K += 1;
    EXPECT_FALSE(check_passed(verify(bad), "dimension"));
}

TEST(codes, random_general_codes_verify) {
    std::mt19937_64 rng(31);
    int partial = 0;
    for (int trial = 0; trial < 200; trial++) {
        size_t p = 1 + trial % 3;
        auto [theta, z] = lca_test::random_code_input(rng, p);
        GeneralLcaCode code = build_general(theta, z);
        VerifyReport report = verify(code);
        ASSERT_TRUE(report.ok()) << "trial " << trial << "\n" << report.str() << theta.str() << z.str();
        if (code.k < code.p) {
            partial++;
        }
        // Closed-form dual torus against the pairing of the logical encoder.
        RationalMatrix jc = j_cv(p);
        RationalMatrix sjs = pair(code.s_cv, code.s_cv, jc) + code.s_dv.transpose() * j_dv(code.cvec) * code.s_dv;
        ASSERT_EQ(dual_torus(code), -sjs);
    }
    EXPECT_GT(partial, 20);
}

TEST(codes, dimension_is_invariant_under_basis_change) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; trial++) {
        size_t p = 1 + trial % 3;
        auto [theta, z] = lca_test::random_code_input(rng, p);
        GeneralLcaCode code = build_general(theta, z);

        // Another valid Q: [[I, diag s], [0, I]] Q preserves the canonical form.
        RationalMatrix shear = RationalMatrix::identity(2 * p);
        for (size_t i = 0; i < p; i++) {
            shear(i, p + i) = lca_test::uniform(rng, -3, 3);
        }
        BuildHints hints;
        hints.q = shear * code.q;
        GeneralLcaCode other = build_general(theta, z, hints);
        ASSERT_EQ(other.K, code.K);
        ASSERT_TRUE(verify(other).ok());

        RationalMatrix u = lca_test::random_unimodular(rng, 2 * p);
        GeneralLcaCode moved = build_general(u.transpose() * theta * u, u.transpose() * z * u);
        ASSERT_EQ(moved.K, code.K);
    }
}

TEST(codes, single_mode_general_matches_simple) {
    for (long c = 1; c <= 10; c++) {
        for (long d = 1; d < c || (c == 1 && d == 1); d++) {
            if (gcd(Integer(c), Integer(d)) != 1) {
                continue;
            }
            for (long theta = 0; theta <= 5; theta++) {
                SimpleLcaCode simple = simple_code(c, d, theta);
                GeneralLcaCode general = to_general(simple);
                ASSERT_EQ(general.K, simple.K) << c << " " << d << " " << theta;
                // Dual torus (a theta + b)/(c theta + d) with the canonical Bezout pair.
                ASSERT_EQ(general.dual, scalar_j(ratio(simple.a * simple.theta + simple.b, simple.K)));
            }
        }
    }
}

TEST(codes, dual_torus_examples) {
    for (long c = 2; c <= 9; c++) {
        for (long d = 1; d < c; d++) {
            if (gcd(Integer(c), Integer(d)) != 1) {
                continue;
            }
            SimpleLcaCode simple = simple_code(c, d, 0);
            EXPECT_EQ(dual_torus(to_general(simple)), scalar_j(ratio(simple.b, d)));
        }
    }
}

TEST(codes, logical_dimension_examples) {
    EXPECT_EQ(logical_dimension(to_general(simple_code(3, 2, 0))), 2);
    EXPECT_EQ(logical_dimension(standard_form_multi({3, 4}, {2, 3}, {0, 0})), 6);
    GeneralLcaCode c321 = to_general(simple_code(3, 2, 1));
    EXPECT_EQ(pfaffian(c321.theta - c321.z), ratio(5, 3));
    EXPECT_EQ(logical_dimension(c321), 5);
}

TEST(codes, standard_form_examples) {
    GeneralLcaCode qunaught = standard_form_multi({1}, {1}, {0});
    EXPECT_EQ(qunaught.K, 1);

    GeneralLcaCode two = standard_form_multi({2, 3}, {1, 2}, {0, 0});
    EXPECT_EQ(two.K, 2);
    EXPECT_EQ(two.p, 2u);
    EXPECT_EQ(two.cvec, (std::vector<Integer>{2, 3}));

    GeneralLcaCode eleven = standard_form_multi({6}, {5}, {1});
    EXPECT_EQ(eleven.K, 11);

    // T_cv = I_2 (x) sqrt(theta + d/c) and T_dv = (-diag d) (+) I.
    GeneralLcaCode code = standard_form_multi({3, 5}, {2, 2}, {1, 0});
    ScaledMatrix expected_t({ratio(5, 3), ratio(2, 5), ratio(5, 3), ratio(2, 5)}, RationalMatrix::identity(4));
    EXPECT_TRUE(code.t_cv.equals(expected_t));
    EXPECT_EQ(code.t_dv, (RationalMatrix{{-2, 0, 0, 0}, {0, -2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    EXPECT_EQ(code.K, 5 * 2);
    EXPECT_TRUE(verify(code).ok());

    // Agrees with the unhinted construction up to unimodular freedom.
    GeneralLcaCode plain = build_general(code.theta, code.z);
    EXPECT_EQ(plain.K, code.K);

    EXPECT_THROW(standard_form_multi({3}, {3}, {0}), std::invalid_argument);
    EXPECT_THROW(standard_form_multi({3}, {3}, {-1}), std::invalid_argument);
}

TEST(codes, standard_form_negative_entries_fall_back) {
    GeneralLcaCode code = standard_form_multi({3, 2}, {-2, 1}, {0, 1});
    EXPECT_EQ(code.K, 2 * 3);
    EXPECT_TRUE(verify(code).ok());
}

TEST(codes, prep_symplectic_examples) {
    GeneralLcaCode code = to_general(simple_code(3, 2, 0));
    PrepSymplectic same = prep_symplectic(code, code);
    EXPECT_TRUE(same.s_cv.equals(ScaledMatrix::from_rational(RationalMatrix::identity(2))));
    EXPECT_EQ(same.l, RationalMatrix::identity(2));

    RationalMatrix squeeze(2, 2);
    squeeze(0, 0) = 2;
    squeeze(1, 1) = ratio(1, 2);
    GeneralLcaCode squeezed = apply_gaussian(code, squeeze);
    EXPECT_TRUE(verify(squeezed).ok());
    PrepSymplectic s = prep_symplectic(code, squeezed);
    EXPECT_TRUE(s.s_cv.is_rational());
    EXPECT_EQ(s.s_cv.to_rational(), squeeze);

    GeneralLcaCode other = to_general(simple_code(3, 2, 1));
    EXPECT_THROW(prep_symplectic(code, other), std::invalid_argument);
    EXPECT_THROW(apply_gaussian(code, RationalMatrix{{2, 0}, {0, 2}}), std::invalid_argument);
}

TEST(codes, prep_symplectic_to_standard_form) {
    // The hinted standard form and the Smith-form construction share Theta and Z: R = I works
    // and S_cv carries one lattice onto the other.
    std::vector<std::vector<long>> cases = {{3, 2, 0}, {5, 3, 1}, {7, 4, 2}, {2, 1, 0}};
    for (const auto &cs : cases) {
        GeneralLcaCode standard = standard_form_multi({cs[0]}, {cs[1]}, {cs[2]});
        GeneralLcaCode plain = build_general(standard.theta, standard.z);
        // L solves L T_dv(plain) = T_dv(standard) over Q; integer for these codes.
        RationalMatrix l = standard.t_dv * inverse(plain.t_dv);
        ASSERT_TRUE(l.is_integer()) << l.str();
        PrepSymplectic s = prep_symplectic(plain, standard, std::nullopt, l);
        RationalMatrix jc = j_cv(1);
        EXPECT_EQ(pair(s.s_cv, s.s_cv, jc), jc);
        ScaledMatrix mapped = multiply(s.s_cv, plain.t_cv);
        EXPECT_TRUE(mapped.equals(standard.t_cv));
    }
}

TEST(codes, verify_simple_detects_corruption) {
    SimpleLcaCode code = simple_code(3, 2, 1);
    EXPECT_TRUE(verify(code).ok());
    SimpleLcaCode bad = code;
    bad.K += 1;
    EXPECT_FALSE(verify(bad).ok());
    bad = code;
    bad.a += 1;
    EXPECT_FALSE(verify(bad).ok());
    bad = code;
    bad.unit_sq = ratio(1, 3);
    EXPECT_FALSE(verify(bad).ok());
    bad = code;
    bad.d = 3;
    EXPECT_FALSE(verify(bad).ok());
}
