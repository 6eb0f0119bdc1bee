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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lca/catalog.h"
#include "lca/decoder.h"
#include "lca/exactmath.h"
#include "lca/gates.h"
#include "lca/heisenberg.h"
#include "serialize.h"

namespace lca::cli {

const char *const kMonteCarloHeader = "strategy,c,d,theta,sigma,p_x,p_z,trials,failures,rate";

namespace {

using io::Json;

// Raised by a command whose exact checks fail; carries the JSON report for stdout.
struct VerificationFailure {
    Json report;
};

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void emit(std::ostream &out, const Json &j) {
    out << j.dump(2) << "\n";
}

// Writes `text` to `path`, or to `out` when path is empty.
void write_or_print(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty()) {
        out << text;
    } else {
        io::write_text_file(path, text);
    }
}

io::Code load_code(const std::string &path) {
    return io::code_from_json(io::read_json_file(path));
}

RationalMatrix load_matrix(const std::string &path) {
    return io::matrix_from_json(io::read_json_file(path));
}

const SimpleLcaCode &require_simple(const io::Code &code, const char *command) {
    if (const auto *s = std::get_if<SimpleLcaCode>(&code)) {
        return *s;
    }
    throw std::invalid_argument(std::string(command) + " requires a simple code");
}

std::vector<Integer> to_integers(const std::vector<long> &v) {
    return std::vector<Integer>(v.begin(), v.end());
}

Json report_json(const VerifyReport &report) {
    Json out = Json::object();
    out["ok"] = report.ok();
    out["checks"] = io::to_json(report);
    return out;
}

// Writes the CodeFile and prints a short summary; fails with exit 2 when verify() fails.
void output_code(const io::Code &code, const std::string &path, std::ostream &out) {
    VerifyReport report = std::visit([](const auto &c) { return verify(c); }, code);
    Json file = io::code_to_json(code);
    if (path.empty()) {
        emit(out, file);
    } else {
        io::write_text_file(path, file.dump(2) + "\n");
        Json summary = Json::object();
        summary["kind"] = file["kind"];
        summary["K"] = file["K"];
        summary["ok"] = report.ok();
        summary["out"] = path;
        emit(out, summary);
    }
    if (!report.ok()) {
        throw VerificationFailure{report_json(report)};
    }
}

struct Options {
    Integer c_value, d_value, theta_value;
    std::string c_text, d_text, theta_text;
    std::string out;
    std::string code_path;
    std::string theta_path, z_path, a_path, w_path, g_path;
    std::string strategy = "pure";
    size_t grid = 21;
    double sigma = 0, p_x = 0, p_z = 0;
    uint64_t trials = 1000, seed = 0;
    unsigned threads = 1;
    std::vector<long> theta_vec, l1, l2;
};

// ---- commands ----

void cmd_simple(const Options &o, std::ostream &out) {
    SimpleLcaCode code = simple_code(parse_integer(o.c_text), parse_integer(o.d_text), parse_integer(o.theta_text));
    output_code(code, o.out, out);
}

void cmd_build(const Options &o, std::ostream &out) {
    output_code(build_general(load_matrix(o.theta_path), load_matrix(o.z_path)), o.out, out);
}

void cmd_verify(const Options &o, std::ostream &out) {
    io::Code code = load_code(o.code_path);
    VerifyReport report = std::visit([](const auto &c) { return verify(c); }, code);
    Json j = report_json(report);
    j["kind"] = std::holds_alternative<SimpleLcaCode>(code) ? "simple" : "general";
    j["K"] = std::visit([](const auto &c) { return to_string(c.K); }, code);
    if (!report.ok()) {
        throw VerificationFailure{j};
    }
    emit(out, j);
}

void cmd_logicals(const Options &o, std::ostream &out) {
    io::Code code = load_code(o.code_path);
    Json j = Json::object();
    if (const auto *s = std::get_if<SimpleLcaCode>(&code)) {
        LatticeFrame f = s->frame();
        j["kind"] = "simple";
        j["K"] = to_string(s->K);
        j["unit_sq"] = to_string(f.unit_sq);
        j["coordinates"] = "(m_cv, s_cv, m_dv, s_dv) with CV entries in units of sqrt(unit_sq)";
        j["stabilizers"] = io::to_json(f.stabilizers);
        j["logicals"] = io::to_json(f.logicals);
        std::vector<Rational> xs = f.logicals.col(0), zs = f.logicals.col(1);
        Rational phase = phase_inner(from_coordinates(f, xs), from_coordinates(f, zs), f);
        j["logical_commutator_phase"] = to_string(phase);
        j["logical_commutator_order"] = to_string(Integer(phase.get_den()));
    } else {
        const GeneralLcaCode &g = std::get<GeneralLcaCode>(code);
        j["kind"] = "general";
        j["K"] = to_string(g.K);
        j["s_cv"] = io::to_json(g.s_cv);
        j["s_dv"] = io::to_json(g.s_dv);
        j["dual"] = io::to_json(g.dual);
    }
    emit(out, j);
}

void cmd_smith(const Options &o, std::ostream &out) {
    RationalMatrix a = load_matrix(o.a_path);
    if (!a.is_square() || !a.is_antisymmetric()) {
        throw std::invalid_argument("smith: A must be square and anti-symmetric");
    }
    Integer m = a.common_denominator();
    AltSmithDecomposition dec = alt_smith(a * Rational(m));
    Json j = Json::object();
    j["m"] = to_string(m);
    j["k"] = dec.k;
    j["h"] = io::to_json(dec.h);
    j["transform"] = io::to_json(dec.transform);
    j["canonical"] = io::to_json(canonical_alt_form(a.rows(), dec.h));
    emit(out, j);
}

void cmd_distance(const Options &o, std::ostream &out) {
    const SimpleLcaCode code = require_simple(load_code(o.code_path), "distance");
    Rational d2 = distance_simple(code);
    Json j = Json::object();
    j["distance_sq_over_2pi"] = to_string(d2);
    j["distance_in_units"] = to_string(code.c);
    j["distance"] = fmt12(std::sqrt(2 * M_PI * d2.get_d()));
    emit(out, j);
}

Json gate_json(const GaussianClifford &v, const GateReport &report) {
    Json j = Json::object();
    j["gate"] = io::to_json(v);
    j["ok"] = report.ok();
    j["checks"] = io::to_json(VerifyReport{report.checks});
    if (report.logical_action) {
        j["logical_action"] = io::to_json(*report.logical_action);
    }
    return j;
}

void emit_gate(const GaussianClifford &v, const GateReport &report, std::ostream &out) {
    Json j = gate_json(v, report);
    if (!report.ok()) {
        throw VerificationFailure{j};
    }
    emit(out, j);
}

void cmd_gate(const Options &o, std::ostream &out) {
    io::Code code = load_code(o.code_path);
    RationalMatrix w = load_matrix(o.w_path);
    if (const auto *s = std::get_if<SimpleLcaCode>(&code)) {
        GaussianClifford v = synthesize(*s, w);
        emit_gate(v, verify_gate(*s, v), out);
    } else {
        const GeneralLcaCode &g = std::get<GeneralLcaCode>(code);
        GaussianClifford v = synthesize(g, w);
        emit_gate(v, verify_gate(g, v), out);
    }
}

void cmd_hadamard(const Options &o, std::ostream &out) {
    const SimpleLcaCode code = require_simple(load_code(o.code_path), "hadamard");
    GaussianClifford v = hadamard(code);
    emit_gate(v, verify_gate(code, v), out);
}

void cmd_lift(const Options &o, std::ostream &out) {
    RationalMatrix lift = lift_sp2_modc(load_matrix(o.w_path), parse_integer(o.c_text), parse_integer(o.d_text));
    Json j = Json::object();
    j["lift"] = io::to_json(lift);
    j["det"] = to_string(det(lift));
    emit(out, j);
}

void cmd_decode_sweep(const Options &o, std::ostream &out) {
    const SimpleLcaCode code = require_simple(load_code(o.code_path), "decode-sweep");
    Strategy strategy = parse_strategy(o.strategy);
    if (o.grid == 0) {
        throw std::invalid_argument("decode-sweep: --grid must be positive");
    }
    std::vector<GridCell> cells = run_grid_sweep(code, strategy, o.grid);
    std::ostringstream csv;
    csv << "strategy,c,d,theta,eps1,eps2,n,w,success\n";
    size_t failures = 0;
    for (const GridCell &cell : cells) {
        failures += cell.success ? 0 : 1;
        csv << strategy_name(strategy) << "," << code.c << "," << code.d << "," << code.theta << ","
            << fmt12(cell.eps1) << "," << fmt12(cell.eps2) << "," << cell.n << "," << cell.w << ","
            << (cell.success ? 1 : 0) << "\n";
    }
    write_or_print(o.out, csv.str(), out);
    if (!o.out.empty()) {
        Json j = Json::object();
        j["strategy"] = strategy_name(strategy);
        j["cells"] = cells.size();
        j["failures"] = failures;
        j["out"] = o.out;
        emit(out, j);
    }
}

void cmd_decode_mc(const Options &o, std::ostream &out) {
    const SimpleLcaCode code = require_simple(load_code(o.code_path), "decode-mc");
    Strategy strategy = parse_strategy(o.strategy);
    MonteCarloParams params;
    params.sigma = o.sigma;
    params.p_x = o.p_x;
    params.p_z = o.p_z;
    params.trials = o.trials;
    params.seed = o.seed;
    params.threads = o.threads;
    MonteCarloStats stats = run_monte_carlo(code, strategy, params);

    std::ostringstream csv;
    csv << kMonteCarloHeader << "\n";
    csv << strategy_name(strategy) << "," << code.c << "," << code.d << "," << code.theta << "," << fmt12(o.sigma)
        << "," << fmt12(o.p_x) << "," << fmt12(o.p_z) << "," << stats.trials << "," << stats.failures << ","
        << fmt12(stats.rate) << "\n";
    write_or_print(o.out, csv.str(), out);
    if (!o.out.empty()) {
        Json j = Json::object();
        j["strategy"] = strategy_name(strategy);
        j["trials"] = stats.trials;
        j["failures"] = stats.failures;
        j["rate"] = fmt12(stats.rate);
        // sigma is in u'-units; multiply by this factor for physical quadrature units.
        j["physical_sigma_factor"] = fmt12(std::sqrt(2 * M_PI * code.unit_sq.get_d()));
        Json hist = Json::array();
        for (const auto &[cls, count] : stats.histogram) {
            hist.push_back(Json::array({cls.first, cls.second, count}));
        }
        j["histogram"] = hist;
        j["out"] = o.out;
        emit(out, j);
    }
}

void cmd_catalog_e8(std::ostream &out) {
    RationalMatrix e8 = e8_matrix();
    RationalMatrix perm = interleave_permutation(4);
    Json j = Json::object();
    j["matrix"] = io::to_json(e8);
    j["det"] = to_string(det(e8));
    j["symplectic_block_ordering"] = is_integer_symplectic(e8, 4);
    j["symplectic_interleaved_ordering"] = is_integer_symplectic(perm.transpose() * e8 * perm, 4);
    j["mod2"] = io::to_json(mod_reduce(e8, std::vector<Integer>(4, Integer(2))));
    emit(out, j);
}

void cmd_catalog_binary(const Options &o, std::ostream &out) {
    std::optional<std::vector<Integer>> l1, l2;
    if (!o.l1.empty()) {
        l1 = to_integers(o.l1);
    }
    if (!o.l2.empty()) {
        l2 = to_integers(o.l2);
    }
    output_code(binary_code_lca(load_matrix(o.g_path), l1, l2), o.out, out);
}

void cmd_catalog_commutation(const Options &o, std::ostream &out) {
    std::optional<std::vector<Integer>> thetas;
    if (!o.theta_vec.empty()) {
        thetas = to_integers(o.theta_vec);
    }
    output_code(commutation_matrix_code(load_matrix(o.a_path), thetas), o.out, out);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Exact constructions for hybrid oscillator-qudit LCA codes", "lcacode"};
    app.require_subcommand(1);

    auto *simple = app.add_subcommand("simple", "Construct a simple (c, d, theta) code");
    simple->add_option("--c", o.c_text, "Qudit dimension c")->required();
    simple->add_option("--d", o.d_text, "Integer d coprime to c")->required();
    simple->add_option("--theta", o.theta_text, "Integer theta")->required();
    simple->add_option("--out", o.out, "CodeFile path (default: stdout)");

    auto *build = app.add_subcommand("build", "Construct a general code from Theta and Z");
    build->add_option("--theta", o.theta_path, "MatrixFile with integer anti-symmetric Theta")->required();
    build->add_option("--z", o.z_path, "MatrixFile with rational anti-symmetric Z")->required();
    build->add_option("--out", o.out, "CodeFile path (default: stdout)");

    auto *verify_cmd = app.add_subcommand("verify", "Exact verification of a CodeFile");
    verify_cmd->add_option("code", o.code_path, "CodeFile")->required();

    auto *logicals = app.add_subcommand("logicals", "Logical operators and commutation data");
    logicals->add_option("code", o.code_path, "CodeFile")->required();

    auto *smith = app.add_subcommand("smith", "Alternating Smith form of m A");
    smith->add_option("--a", o.a_path, "MatrixFile with anti-symmetric A")->required();

    auto *distance = app.add_subcommand("distance", "Pure-displacement distance of a simple code");
    distance->add_option("code", o.code_path, "CodeFile")->required();

    auto *gate = app.add_subcommand("gate", "Synthesize the Gaussian-Clifford gate for a lattice automorphism W");
    gate->add_option("code", o.code_path, "CodeFile")->required();
    gate->add_option("--w", o.w_path, "MatrixFile with W")->required();

    auto *had = app.add_subcommand("hadamard", "Logical Hadamard of a simple code");
    had->add_option("code", o.code_path, "CodeFile")->required();

    auto *lift = app.add_subcommand("lift", "Lift an element of Sp(2, Z_c) into Gamma_0(d)");
    lift->add_option("--w", o.w_path, "MatrixFile with W mod c")->required();
    lift->add_option("--c", o.c_text, "Modulus c")->required();
    lift->add_option("--d", o.d_text, "Level d")->required();

    auto *sweep = app.add_subcommand("decode-sweep", "Deterministic decoder sweep over a shift grid");
    sweep->add_option("code", o.code_path, "CodeFile")->required();
    sweep->add_option("--strategy", o.strategy, "pure or qudit")->required();
    sweep->add_option("--grid", o.grid, "Grid points per axis");
    sweep->add_option("--out", o.out, "CSV path (default: stdout)");

    auto *mc = app.add_subcommand("decode-mc", "Monte Carlo logical failure rate");
    mc->add_option("code", o.code_path, "CodeFile")->required();
    mc->add_option("--strategy", o.strategy, "pure or qudit")->required();
    mc->add_option("--sigma", o.sigma, "Gaussian shift width in u'-units");
    mc->add_option("--px", o.p_x, "Qudit X error probability");
    mc->add_option("--pz", o.p_z, "Qudit Z error probability");
    mc->add_option("--trials", o.trials, "Number of trials");
    mc->add_option("--seed", o.seed, "RNG seed");
    mc->add_option("--threads", o.threads, "Worker threads (results do not depend on this)");
    mc->add_option("--out", o.out, "CSV path (default: stdout)");

    auto *catalog = app.add_subcommand("catalog", "Worked constructions");
    catalog->require_subcommand(1);
    auto *e8 = catalog->add_subcommand("e8", "E8 integer symplectic matrix");
    auto *binary = catalog->add_subcommand("binary", "Oscillator-qubit code from a binary generator matrix");
    binary->add_option("--g", o.g_path, "MatrixFile with the 2k x 2p binary matrix G")->required();
    binary->add_option("--l1", o.l1, "Diagonal of L1 (entries +-1)");
    binary->add_option("--l2", o.l2, "Diagonal of L2 (entries +-1)");
    binary->add_option("--out", o.out, "CodeFile path (default: stdout)");
    auto *commutation = catalog->add_subcommand("commutation", "Code from a rational commutation matrix");
    commutation->add_option("--a", o.a_path, "MatrixFile with anti-symmetric A")->required();
    commutation->add_option("--theta-vec", o.theta_vec, "Theta per pair");
    commutation->add_option("--out", o.out, "CodeFile path (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    try {
        if (simple->parsed()) {
            cmd_simple(o, out);
        } else if (build->parsed()) {
            cmd_build(o, out);
        } else if (verify_cmd->parsed()) {
            cmd_verify(o, out);
        } else if (logicals->parsed()) {
            cmd_logicals(o, out);
        } else if (smith->parsed()) {
            cmd_smith(o, out);
        } else if (distance->parsed()) {
            cmd_distance(o, out);
        } else if (gate->parsed()) {
            cmd_gate(o, out);
        } else if (had->parsed()) {
            cmd_hadamard(o, out);
        } else if (lift->parsed()) {
            cmd_lift(o, out);
        } else if (sweep->parsed()) {
            cmd_decode_sweep(o, out);
        } else if (mc->parsed()) {
            cmd_decode_mc(o, out);
        } else if (e8->parsed()) {
            cmd_catalog_e8(out);
        } else if (binary->parsed()) {
            cmd_catalog_binary(o, out);
        } else if (commutation->parsed()) {
            cmd_catalog_commutation(o, out);
        }
    } catch (const VerificationFailure &f) {
        emit(out, f.report);
        err << "verification failed\n";
        return kExitVerifyFailed;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::runtime_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::logic_error &e) {
        // Internal self-checks (construction or gate verification) report as exit 2.
        Json j = Json::object();
        j["ok"] = false;
        j["error"] = e.what();
        emit(out, j);
        err << "verification failed: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace lca::cli
