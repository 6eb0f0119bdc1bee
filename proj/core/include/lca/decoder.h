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

#ifndef LCA_DECODER_H
#define LCA_DECODER_H

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lca/codes.h"
#include "lca/heisenberg.h"

namespace lca {

// All quantities are in u'-units: d_LCA = c and delta = 1/2.

struct ErrorSample {
    double eps1 = 0;
    double eps2 = 0;
    /// X power, reduced mod c.
    Integer n = 0;
    /// Z power, reduced mod c.
    Integer w = 0;
};

struct Syndrome {
    /// Both in [0, c).
    double xi1 = 0;
    double xi2 = 0;
};

enum class Strategy { kPure, kQudit };

std::string strategy_name(Strategy s);
/// Accepts "pure" and "qudit"; throws std::invalid_argument otherwise.
Strategy parse_strategy(const std::string &name);

struct DecodeOutcome {
    Syndrome syndrome;
    HybridDisplacement correction;
    std::pair<Integer, Integer> residual_class;
    bool success = false;
};

/// xi1 = (eps1 + n) mod c and xi2 = (eps2 - w d) mod c, obtained from the commutation phases with
/// S_Z and S_X. A pure X error reads like the shift eps1 = 1; Z^a reads like eps2 = 1.
Syndrome syndrome(const SimpleLcaCode &code, const ErrorSample &e);

/// Region label in 1..c. Region 1 covers [0, 1/2] and [c - 1/2, c); region r >= 2 covers
/// (r - 3/2, r - 1/2]. Shared boundaries go to the smaller label. Throws std::out_of_range
/// unless 0 <= xi < c.
int region_of(const SimpleLcaCode &code, double xi);

/// x mod c wrapped into (-c/2, c/2].
double wrap_centered(double x, const Integer &c);

/// Smallest pure shift undoing the syndrome; a tie at c/2 yields the correction -c/2.
HybridDisplacement decode_pure(const SimpleLcaCode &code, const Syndrome &s);

/// Per axis: region r gives the qudit correction X^-(r-1) (resp. Z^-a(r-1)) plus the shift
/// -(xi - (r - 1)) wrapped into (-1/2, 1/2].
HybridDisplacement decode_qudit(const SimpleLcaCode &code, const Syndrome &s);

HybridDisplacement error_displacement(const SimpleLcaCode &code, const ErrorSample &e);

/// Residual compose(correction, error), CV coordinates snapped to integers, then classified.
/// Throws std::runtime_error if a residual coordinate is farther than 1e-9 from an integer.
DecodeOutcome adjudicate(const SimpleLcaCode &code, const ErrorSample &e, const HybridDisplacement &correction);

/// Syndrome, decode with the strategy, adjudicate.
DecodeOutcome decode(const SimpleLcaCode &code, Strategy strategy, const ErrorSample &e);

struct GridSpec {
    /// Grid points per axis; cell centers lo + (i + 1/2)(hi - lo)/points avoid the range ends.
    size_t points = 21;
    double lo = -0.5;
    double hi = 0.5;
    /// Sweep every (n, w) in Z_c^2 rather than only (0, 0).
    bool all_qudit_errors = false;
};

/// Default grid for a strategy: |eps| < 0.99 c/2 for pure, |eps| < 0.99/2 with all qudit errors
/// for qudit.
GridSpec default_grid(const SimpleLcaCode &code, Strategy strategy, size_t points);

struct GridCell {
    double eps1 = 0;
    double eps2 = 0;
    Integer n = 0;
    Integer w = 0;
    bool success = false;
};

std::vector<GridCell> run_grid_sweep(const SimpleLcaCode &code, Strategy strategy, const GridSpec &grid);
std::vector<GridCell> run_grid_sweep(const SimpleLcaCode &code, Strategy strategy, size_t grid_points);

struct MonteCarloParams {
    double sigma = 0;
    double p_x = 0;
    double p_z = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    unsigned threads = 1;
};

struct MonteCarloStats {
    uint64_t trials = 0;
    uint64_t failures = 0;
    double rate = 0;
    /// Count per residual logical class, including (0, 0).
    std::map<std::pair<long, long>, uint64_t> histogram;
};

/// The error drawn for one trial: eps ~ N(0, sigma^2) per axis; with probability p_x an X power
/// uniform in 1..c-1, likewise p_z for Z. Depends only on (code, params, trial).
ErrorSample sample_error(const SimpleLcaCode &code, const MonteCarloParams &params, uint64_t trial);

/// Throws std::invalid_argument for sigma < 0, probabilities outside [0, 1] or threads == 0.
/// Results do not depend on the thread count.
MonteCarloStats run_monte_carlo(const SimpleLcaCode &code, Strategy strategy, const MonteCarloParams &params);

}  // namespace lca

#endif
