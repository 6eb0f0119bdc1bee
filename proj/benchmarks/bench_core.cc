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

#include <random>

#include "benchmark/benchmark.h"
#include "lca/codes.h"
#include "lca/decoder.h"
#include "lca/exactmath.h"
#include "lca/gates.h"

using namespace lca;

namespace {

RationalMatrix random_antisymmetric(std::mt19937_64 &rng, size_t n, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    RationalMatrix a(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            a(i, j) = dist(rng);
            a(j, i) = -a(i, j);
        }
    }
    return a;
}

// Theta - Z invertible with Z = -(pairs of d/c) and Theta = pairs of theta.
std::pair<RationalMatrix, RationalMatrix> standard_input(size_t p) {
    RationalMatrix theta(2 * p, 2 * p), z(2 * p, 2 * p);
    for (size_t j = 0; j < p; j++) {
        theta(j, p + j) = static_cast<long>(j + 1);
        theta(p + j, j) = -static_cast<long>(j + 1);
        z(j, p + j) = -ratio(2 * j + 1, 2 * j + 3);
        z(p + j, j) = ratio(2 * j + 1, 2 * j + 3);
    }
    // Mix the coordinates so the Smith reductions have work to do.
    RationalMatrix u = RationalMatrix::identity(2 * p);
    for (size_t i = 0; i + 1 < 2 * p; i++) {
        u(i, i + 1) = 1;
    }
    return {u.transpose() * theta * u, u.transpose() * z * u};
}

}  // namespace

static void BM_alt_smith(benchmark::State &state) {
    std::mt19937_64 rng(1);
    size_t n = static_cast<size_t>(state.range(0));
    std::vector<RationalMatrix> inputs;
    for (int i = 0; i < 16; i++) {
        inputs.push_back(random_antisymmetric(rng, n, 20));
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(alt_smith(inputs[i++ % inputs.size()]));
    }
}
BENCHMARK(BM_alt_smith)->Arg(4)->Arg(8)->Arg(12);

static void BM_build_general(benchmark::State &state) {
    auto [theta, z] = standard_input(static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_general(theta, z));
    }
}
BENCHMARK(BM_build_general)->Arg(1)->Arg(2)->Arg(3);

static void BM_verify(benchmark::State &state) {
    auto [theta, z] = standard_input(static_cast<size_t>(state.range(0)));
    GeneralLcaCode code = build_general(theta, z);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify(code));
    }
}
BENCHMARK(BM_verify)->Arg(1)->Arg(3);

static void BM_hadamard(benchmark::State &state) {
    SimpleLcaCode code = simple_code(7, 3, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hadamard(code));
    }
}
BENCHMARK(BM_hadamard);

static void BM_decode_mc(benchmark::State &state) {
    SimpleLcaCode code = simple_code(3, 2, 0);
    MonteCarloParams params;
    params.sigma = 0.4;
    params.p_x = 0.05;
    params.p_z = 0.05;
    params.trials = 1000;
    params.seed = 3;
    Strategy strategy = state.range(0) == 0 ? Strategy::kPure : Strategy::kQudit;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_monte_carlo(code, strategy, params));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(params.trials));
}
BENCHMARK(BM_decode_mc)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
