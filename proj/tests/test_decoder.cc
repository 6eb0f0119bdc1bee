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

#include "lca/decoder.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace lca;

namespace {

ErrorSample err(double eps1, double eps2, long n = 0, long w = 0) {
    ErrorSample e;
    e.eps1 = eps1;
    e.eps2 = eps2;
    e.n = n;
    e.w = w;
    return e;
}

std::pair<Integer, Integer> cls(long a, long b) {
    return {Integer(a), Integer(b)};
}

}  // namespace

TEST(decoder, syndrome_examples) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    Syndrome s = syndrome(code, err(0.3, 0));
    EXPECT_NEAR(s.xi1, 0.3, 1e-12);
    EXPECT_NEAR(s.xi2, 0, 1e-12);

    // A pure X error reads like the shift eps1 = 1 = 2 delta.
    s = syndrome(code, err(0, 0, 1, 0));
    EXPECT_EQ(s.xi1, 1.0);
    EXPECT_EQ(s.xi2, 0.0);

    // Z^a reads like eps2 = 1.
    s = syndrome(code, err(0, 0, 0, to_long(code.a)));
    EXPECT_EQ(s.xi1, 0.0);
    EXPECT_EQ(s.xi2, 1.0);

    s = syndrome(code, err(0, 0.4));
    EXPECT_NEAR(s.xi2, 0.4, 1e-12);
    s = syndrome(code, err(-0.4, -0.2));
    EXPECT_NEAR(s.xi1, 2.6, 1e-12);
    EXPECT_NEAR(s.xi2, 2.8, 1e-12);
}

TEST(decoder, syndrome_closed_form) {
    for (long c = 1; c <= 7; c++) {
        for (long d = 1; d <= c; d++) {
            if (gcd(Integer(c), Integer(d)) != 1) {
                continue;
            }
            SimpleLcaCode code = simple_code(c, d, 1);
            for (long n = 0; n < c; n++) {
                for (long w = 0; w < c; w++) {
                    Syndrome s = syndrome(code, err(0.25, -0.125, n, w));
                    double xi1 = std::fmod(0.25 + n, static_cast<double>(c));
                    double xi2 = std::fmod(-0.125 - static_cast<double>(w * d) + 100.0 * c, static_cast<double>(c));
                    ASSERT_NEAR(s.xi1, xi1, 1e-12);
                    ASSERT_NEAR(s.xi2, xi2, 1e-12);
                }
            }
        }
    }
}

TEST(decoder, stabilizer_errors_have_trivial_syndrome) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    // S_X = (K, 0 | -d, 0) and S_Z = (0, K | 0, 1) in u'-units.
    Syndrome s = syndrome(code, err(2, 0, -2, 0));
    EXPECT_NEAR(s.xi1, 0, 1e-12);
    EXPECT_NEAR(s.xi2, 0, 1e-12);
    s = syndrome(code, err(0, 2, 0, 1));
    EXPECT_NEAR(s.xi1, 0, 1e-12);
    EXPECT_NEAR(s.xi2, 0, 1e-12);
}

TEST(decoder, region_examples) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    EXPECT_EQ(region_of(code, 0.3), 1);
    EXPECT_EQ(region_of(code, 1.2), 2);
    EXPECT_EQ(region_of(code, 2.5), 1);
    EXPECT_EQ(region_of(code, 0.5), 1);
    EXPECT_EQ(region_of(code, 1.5), 2);
    EXPECT_EQ(region_of(code, 1.6), 3);
    EXPECT_EQ(region_of(code, 2.6), 1);
    EXPECT_THROW(region_of(code, 3.0), std::out_of_range);
    EXPECT_THROW(region_of(code, -0.1), std::out_of_range);

    SimpleLcaCode gkp = simple_code(1, 1, 1);
    EXPECT_EQ(region_of(gkp, 0.7), 1);
}

TEST(decoder, decode_pure_examples) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    HybridDisplacement c = decode_pure(code, {0.3, 0});
    EXPECT_NEAR(c.m_cv[0].get_d(), -0.3, 1e-12);
    EXPECT_EQ(c.s_cv[0], 0);
    EXPECT_EQ(c.m_dv[0], 0);

    c = decode_pure(code, {2.8, 0});
    EXPECT_NEAR(c.m_cv[0].get_d(), 0.2, 1e-12);

    c = decode_pure(code, {1.5, 0});
    EXPECT_EQ(c.m_cv[0], Rational(-1.5));
}

TEST(decoder, decode_qudit_examples) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    HybridDisplacement c = decode_qudit(code, {0.3, 0});
    EXPECT_NEAR(c.m_cv[0].get_d(), -0.3, 1e-12);
    EXPECT_EQ(c.m_dv[0], 0);

    c = decode_qudit(code, {1.2, 0});
    EXPECT_EQ(c.m_dv[0], 2);  // X^-1 mod 3
    EXPECT_NEAR(c.m_cv[0].get_d(), -0.2, 1e-12);

    c = decode_qudit(code, {1.0, 0});
    EXPECT_EQ(c.m_dv[0], 2);
    EXPECT_EQ(c.m_cv[0], 0);

    // Region 2 on the second axis: Z^-a.
    c = decode_qudit(code, {0, 1.0});
    EXPECT_EQ(c.s_dv[0], mod_floor(-code.a, code.c));
}

TEST(decoder, adjudicate_examples) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    ErrorSample shift = err(0.3, 0);
    EXPECT_TRUE(adjudicate(code, shift, decode_pure(code, syndrome(code, shift))).success);

    ErrorSample x = err(0, 0, 1, 0);
    EXPECT_TRUE(adjudicate(code, x, decode_qudit(code, syndrome(code, x))).success);

    ErrorSample big = err(1.2, 0);
    DecodeOutcome o = adjudicate(code, big, decode_qudit(code, syndrome(code, big)));
    EXPECT_FALSE(o.success);
    EXPECT_EQ(o.residual_class, cls(1, 0));

    // The pure decoder misreads a shift in (c/2, c) and leaves c X-bar = X-bar^(c mod K).
    ErrorSample far = err(2.0, 0);
    o = decode(code, Strategy::kPure, far);
    EXPECT_FALSE(o.success);
    EXPECT_EQ(o.residual_class, cls(1, 0));

    // A wrong correction that is off the lattice cannot be snapped.
    HybridDisplacement bad = decode_pure(code, syndrome(code, shift));
    bad.m_cv[0] += Rational(0.25);
    EXPECT_THROW(adjudicate(code, shift, bad), std::runtime_error);
}

TEST(decoder, qudit_strategy_misreads_medium_shift) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    DecodeOutcome o = decode(code, Strategy::kQudit, err(0.8, 0));
    EXPECT_FALSE(o.success);
    EXPECT_EQ(o.residual_class, cls(1, 0));
    o = decode(code, Strategy::kPure, err(0.8, 0));
    EXPECT_TRUE(o.success);
}

TEST(decoder, pure_grid_sweep_corrects_open_box) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    auto cells = run_grid_sweep(code, Strategy::kPure, 101);
    EXPECT_EQ(cells.size(), 101u * 101u);
    for (const auto &cell : cells) {
        ASSERT_TRUE(cell.success) << cell.eps1 << " " << cell.eps2;
    }
    GridSpec far;
    far.points = 21;
    far.lo = 1.5;
    far.hi = 3.0;
    size_t failures = 0;
    for (const auto &cell : run_grid_sweep(code, Strategy::kPure, far)) {
        failures += cell.success ? 0 : 1;
    }
    EXPECT_GT(failures, 0u);
}

TEST(decoder, qudit_grid_sweep_corrects_all_qudit_errors) {
    for (auto [c, d] : std::vector<std::pair<long, long>>{{3, 2}, {2, 1}, {5, 3}, {7, 4}}) {
        SimpleLcaCode code = simple_code(c, d, 0);
        auto cells = run_grid_sweep(code, Strategy::kQudit, 21);
        EXPECT_EQ(cells.size(), static_cast<size_t>(c * c * 21 * 21));
        for (const auto &cell : cells) {
            ASSERT_TRUE(cell.success) << c << " " << cell.n << " " << cell.w << " " << cell.eps1 << " " << cell.eps2;
        }
    }
}

TEST(decoder, monte_carlo_noiseless) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    MonteCarloParams params;
    params.trials = 1000;
    params.seed = 7;
    MonteCarloStats st = run_monte_carlo(code, Strategy::kPure, params);
    EXPECT_EQ(st.trials, 1000u);
    EXPECT_EQ(st.failures, 0u);
    EXPECT_EQ(st.rate, 0.0);

    params.p_x = 1;
    params.p_z = 1;
    st = run_monte_carlo(code, Strategy::kQudit, params);
    EXPECT_EQ(st.failures, 0u);
    st = run_monte_carlo(code, Strategy::kPure, params);
    EXPECT_GT(st.failures, 0u);
}

TEST(decoder, monte_carlo_is_deterministic_across_threads) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    MonteCarloParams params;
    params.sigma = 0.5;
    params.p_x = 0.1;
    params.p_z = 0.1;
    params.trials = 3000;
    params.seed = 11;
    MonteCarloStats one = run_monte_carlo(code, Strategy::kQudit, params);
    params.threads = 3;
    MonteCarloStats three = run_monte_carlo(code, Strategy::kQudit, params);
    EXPECT_EQ(one.failures, three.failures);
    EXPECT_EQ(one.histogram, three.histogram);
    uint64_t total = 0;
    for (const auto &[k, v] : one.histogram) {
        total += v;
    }
    EXPECT_EQ(total, params.trials);
    EXPECT_EQ(one.histogram[std::make_pair(0L, 0L)], params.trials - one.failures);
}

TEST(decoder, monte_carlo_monotone_in_sigma) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    MonteCarloParams params;
    params.trials = 20000;
    params.seed = 5;
    params.sigma = 0.05 * 3;
    MonteCarloStats low = run_monte_carlo(code, Strategy::kPure, params);
    params.sigma = 0.25 * 3;
    MonteCarloStats high = run_monte_carlo(code, Strategy::kPure, params);
    EXPECT_LT(low.rate, high.rate);
}

TEST(decoder, monte_carlo_rejects_bad_parameters) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    MonteCarloParams params;
    params.sigma = -1;
    EXPECT_THROW(run_monte_carlo(code, Strategy::kPure, params), std::invalid_argument);
    params.sigma = 0;
    params.p_x = 1.5;
    EXPECT_THROW(run_monte_carlo(code, Strategy::kPure, params), std::invalid_argument);
    params.p_x = 0;
    params.threads = 0;
    EXPECT_THROW(run_monte_carlo(code, Strategy::kPure, params), std::invalid_argument);
    EXPECT_THROW(parse_strategy("greedy"), std::invalid_argument);
    EXPECT_EQ(parse_strategy("qudit"), Strategy::kQudit);
}
