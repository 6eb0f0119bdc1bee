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
#include <random>
#include <stdexcept>
#include <thread>

namespace lca {

namespace {

constexpr double kSnapTolerance = 1e-9;

// Everything the hot path needs, built once per code.
struct DecodeContext {
    const SimpleLcaCode &code;
    LatticeFrame frame;
    HybridDisplacement s_x;
    HybridDisplacement s_z;
    double c;

    explicit DecodeContext(const SimpleLcaCode &code_in) : code(code_in), frame(code_in.frame()) {
        s_x = from_coordinates(frame, {Rational(code.K), 0, Rational(-code.d), 0});
        s_z = from_coordinates(frame, {0, Rational(code.K), 0, 1});
        c = code.c.get_d();
    }
};

double mod_c(double x, double c) {
    double y = std::fmod(x, c);
    if (y < 0) {
        y += c;
    }
    if (y >= c) {
        y = 0;
    }
    return y;
}

// c <E, J s>, with the CV half in floating point and the qudit half exact.
double scaled_pairing(const DecodeContext &ctx, const ErrorSample &e, const HybridDisplacement &s) {
    NoisyDisplacement cv_part{{e.eps1}, {e.eps2}, {0}, {0}};
    double cv = phase_inner(cv_part, s, ctx.frame) * ctx.c;
    HybridDisplacement dv_part = identity_displacement(ctx.frame);
    dv_part.m_dv[0] = mod_floor(e.n, ctx.code.c);
    dv_part.s_dv[0] = mod_floor(e.w, ctx.code.c);
    Rational dv = pairing(dv_part, s, ctx.frame) * ctx.code.c;
    return cv + dv.get_d();
}

Syndrome syndrome_in(const DecodeContext &ctx, const ErrorSample &e) {
    Syndrome s;
    s.xi1 = mod_c(scaled_pairing(ctx, e, ctx.s_z), ctx.c);
    s.xi2 = mod_c(-scaled_pairing(ctx, e, ctx.s_x), ctx.c);
    return s;
}

HybridDisplacement correction_displacement(const LatticeFrame &frame, double shift1, double shift2,
                                           const Integer &x_power, const Integer &z_power) {
    HybridDisplacement out = identity_displacement(frame);
    out.m_cv[0] = Rational(shift1);
    out.s_cv[0] = Rational(shift2);
    out.m_dv[0] = mod_floor(x_power, frame.cvec[0]);
    out.s_dv[0] = mod_floor(z_power, frame.cvec[0]);
    return out;
}

HybridDisplacement decode_in(const DecodeContext &ctx, Strategy strategy, const Syndrome &s) {
    const SimpleLcaCode &code = ctx.code;
    if (strategy == Strategy::kPure) {
        return correction_displacement(ctx.frame, -wrap_centered(s.xi1, code.c), -wrap_centered(s.xi2, code.c), 0,
                                       0);
    }
    int r1 = region_of(code, s.xi1);
    int r2 = region_of(code, s.xi2);
    double shift1 = -wrap_centered(s.xi1 - (r1 - 1), code.c);
    double shift2 = -wrap_centered(s.xi2 - (r2 - 1), code.c);
    return correction_displacement(ctx.frame, shift1, shift2, Integer(-(r1 - 1)), -code.a * (r2 - 1));
}

Rational snap(const Rational &x) {
    double v = x.get_d();
    double r = std::nearbyint(v);
    if (std::fabs(v - r) > kSnapTolerance) {
        throw std::runtime_error("adjudicate: residual coordinate " + std::to_string(v) +
                                 " is not within tolerance of the lattice");
    }
    return Rational(r);
}

DecodeOutcome adjudicate_in(const DecodeContext &ctx, const ErrorSample &e, const HybridDisplacement &correction) {
    DecodeOutcome out;
    out.syndrome = syndrome_in(ctx, e);
    out.correction = correction;
    HybridDisplacement residual = compose(correction, error_displacement(ctx.code, e), ctx.frame);
    for (auto *v : {&residual.m_cv, &residual.s_cv}) {
        for (auto &q : *v) {
            q = snap(q);
        }
    }
    out.residual_class = logical_class(ctx.frame, residual);
    out.success = out.residual_class.first == 0 && out.residual_class.second == 0;
    return out;
}

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void check_params(const MonteCarloParams &params) {
    if (!(params.sigma >= 0) || !std::isfinite(params.sigma)) {
        throw std::invalid_argument("run_monte_carlo: sigma must be finite and >= 0");
    }
    for (double p : {params.p_x, params.p_z}) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("run_monte_carlo: probabilities must lie in [0, 1]");
        }
    }
    if (params.threads == 0) {
        throw std::invalid_argument("run_monte_carlo: threads must be >= 1");
    }
}

}  // namespace

std::string strategy_name(Strategy s) {
    return s == Strategy::kPure ? "pure" : "qudit";
}

Strategy parse_strategy(const std::string &name) {
    if (name == "pure") {
        return Strategy::kPure;
    }
    if (name == "qudit") {
        return Strategy::kQudit;
    }
    throw std::invalid_argument("unknown strategy '" + name + "' (expected pure or qudit)");
}

Syndrome syndrome(const SimpleLcaCode &code, const ErrorSample &e) {
    return syndrome_in(DecodeContext(code), e);
}

int region_of(const SimpleLcaCode &code, double xi) {
    double c = code.c.get_d();
    if (!(xi >= 0 && xi < c)) {
        throw std::out_of_range("region_of: syndrome outside [0, c)");
    }
    if (xi <= 0.5 || xi >= c - 0.5) {
        return 1;
    }
    return static_cast<int>(std::ceil(xi - 0.5)) + 1;
}

double wrap_centered(double x, const Integer &c) {
    double cd = c.get_d();
    double y = std::fmod(x, cd);
    if (y > cd / 2) {
        y -= cd;
    } else if (y <= -cd / 2) {
        y += cd;
    }
    return y;
}

HybridDisplacement decode_pure(const SimpleLcaCode &code, const Syndrome &s) {
    return decode_in(DecodeContext(code), Strategy::kPure, s);
}

HybridDisplacement decode_qudit(const SimpleLcaCode &code, const Syndrome &s) {
    return decode_in(DecodeContext(code), Strategy::kQudit, s);
}

HybridDisplacement error_displacement(const SimpleLcaCode &code, const ErrorSample &e) {
    HybridDisplacement x;
    x.m_cv = {Rational(e.eps1)};
    x.s_cv = {Rational(e.eps2)};
    x.m_dv = {mod_floor(e.n, code.c)};
    x.s_dv = {mod_floor(e.w, code.c)};
    x.phase = 0;
    return x;
}

DecodeOutcome adjudicate(const SimpleLcaCode &code, const ErrorSample &e, const HybridDisplacement &correction) {
    return adjudicate_in(DecodeContext(code), e, correction);
}

DecodeOutcome decode(const SimpleLcaCode &code, Strategy strategy, const ErrorSample &e) {
    DecodeContext ctx(code);
    return adjudicate_in(ctx, e, decode_in(ctx, strategy, syndrome_in(ctx, e)));
}

GridSpec default_grid(const SimpleLcaCode &code, Strategy strategy, size_t points) {
    GridSpec g;
    g.points = points;
    double extent = strategy == Strategy::kPure ? 0.99 * code.c.get_d() / 2 : 0.99 * 0.5;
    g.lo = -extent;
    g.hi = extent;
    g.all_qudit_errors = strategy == Strategy::kQudit;
    return g;
}

std::vector<GridCell> run_grid_sweep(const SimpleLcaCode &code, Strategy strategy, const GridSpec &grid) {
    DecodeContext ctx(code);
    std::vector<GridCell> out;
    long qmax = grid.all_qudit_errors ? to_long(code.c) : 1;
    double step = (grid.hi - grid.lo) / static_cast<double>(grid.points);
    for (long n = 0; n < qmax; n++) {
        for (long w = 0; w < qmax; w++) {
            for (size_t i = 0; i < grid.points; i++) {
                for (size_t j = 0; j < grid.points; j++) {
                    ErrorSample e;
                    e.eps1 = grid.lo + (static_cast<double>(i) + 0.5) * step;
                    e.eps2 = grid.lo + (static_cast<double>(j) + 0.5) * step;
                    e.n = n;
                    e.w = w;
                    DecodeOutcome o = adjudicate_in(ctx, e, decode_in(ctx, strategy, syndrome_in(ctx, e)));
                    out.push_back({e.eps1, e.eps2, e.n, e.w, o.success});
                }
            }
        }
    }
    return out;
}

std::vector<GridCell> run_grid_sweep(const SimpleLcaCode &code, Strategy strategy, size_t grid_points) {
    return run_grid_sweep(code, strategy, default_grid(code, strategy, grid_points));
}

ErrorSample sample_error(const SimpleLcaCode &code, const MonteCarloParams &params, uint64_t trial) {
    std::mt19937_64 rng(mix64(mix64(params.seed) ^ trial));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ErrorSample e;
    e.eps1 = params.sigma * normal(rng);
    e.eps2 = params.sigma * normal(rng);
    long c = to_long(code.c);
    // Draws are made unconditionally so every trial consumes the same stream.
    double ux = unit(rng), uz = unit(rng);
    long px = c > 1 ? std::uniform_int_distribution<long>(1, c - 1)(rng) : 0;
    long pz = c > 1 ? std::uniform_int_distribution<long>(1, c - 1)(rng) : 0;
    e.n = ux < params.p_x ? px : 0;
    e.w = uz < params.p_z ? pz : 0;
    return e;
}

MonteCarloStats run_monte_carlo(const SimpleLcaCode &code, Strategy strategy, const MonteCarloParams &params) {
    check_params(params);
    unsigned threads = params.threads;
    if (params.trials < threads) {
        threads = params.trials == 0 ? 1 : static_cast<unsigned>(params.trials);
    }
    std::vector<MonteCarloStats> partial(threads);
    std::vector<std::string> errors(threads);
    auto worker = [&](unsigned t) {
        try {
            DecodeContext ctx(code);
            uint64_t begin = params.trials * t / threads;
            uint64_t end = params.trials * (t + 1) / threads;
            MonteCarloStats &st = partial[t];
            for (uint64_t trial = begin; trial < end; trial++) {
                ErrorSample e = sample_error(code, params, trial);
                DecodeOutcome o = adjudicate_in(ctx, e, decode_in(ctx, strategy, syndrome_in(ctx, e)));
                st.trials++;
                st.failures += o.success ? 0 : 1;
                st.histogram[{to_long(o.residual_class.first), to_long(o.residual_class.second)}]++;
            }
        } catch (const std::exception &ex) {
            errors[t] = ex.what();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(worker, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    MonteCarloStats total;
    for (unsigned t = 0; t < threads; t++) {
        if (!errors[t].empty()) {
            throw std::runtime_error(errors[t]);
        }
        total.trials += partial[t].trials;
        total.failures += partial[t].failures;
        for (const auto &[k, v] : partial[t].histogram) {
            total.histogram[k] += v;
        }
    }
    total.rate = total.trials == 0 ? 0.0 : static_cast<double>(total.failures) / static_cast<double>(total.trials);
    return total;
}

}  // namespace lca
