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

#include "serialize.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lca::io {

namespace {

const Json &field(const Json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw std::invalid_argument(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

size_t size_from_json(const Json &j) {
    if (!j.is_number_unsigned()) {
        throw std::invalid_argument("expected a non-negative integer");
    }
    return j.get<size_t>();
}

}  // namespace

Json to_json(const Rational &q) {
    return to_string(q);
}

Json to_json(const std::vector<Integer> &v) {
    Json out = Json::array();
    for (const Integer &x : v) {
        out.push_back(to_string(x));
    }
    return out;
}

Json to_json(const std::vector<Rational> &v) {
    Json out = Json::array();
    for (const Rational &x : v) {
        out.push_back(to_string(x));
    }
    return out;
}

Json to_json(const RationalMatrix &m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        rows.push_back(to_json(m.row(r)));
    }
    return rows;
}

Json to_json(const ScaledMatrix &m) {
    Json out = Json::object();
    out["radicands"] = to_json(m.radicands());
    out["base"] = to_json(m.base());
    out["col_radicands"] = to_json(m.col_radicands());
    return out;
}

Json to_json(const MoritaElement &g) {
    Json out = Json::object();
    out["a"] = to_json(g.a);
    out["b"] = to_json(g.b);
    out["c"] = to_json(g.c);
    out["d"] = to_json(g.d);
    return out;
}

Json to_json(const VerifyReport &report) {
    Json checks = Json::array();
    for (const VerifyCheck &c : report.checks) {
        Json entry = Json::object();
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        if (!c.detail.empty()) {
            entry["detail"] = c.detail;
        }
        checks.push_back(entry);
    }
    return checks;
}

Json to_json(const GaussianClifford &v) {
    Json out = Json::object();
    out["v_cv"] = to_json(v.v_cv);
    out["v_dv"] = to_json(v.v_dv);
    return out;
}

Rational rational_from_json(const Json &j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw std::invalid_argument("rational entries must be strings \"p/q\" or integers");
}

Integer integer_from_json(const Json &j) {
    Rational q = rational_from_json(j);
    if (!is_integer(q)) {
        throw std::invalid_argument("expected an integer, got " + to_string(q));
    }
    return to_integer(q);
}

std::vector<Integer> integers_from_json(const Json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("expected an array of integers");
    }
    std::vector<Integer> out;
    for (const Json &x : j) {
        out.push_back(integer_from_json(x));
    }
    return out;
}

std::vector<Rational> rationals_from_json(const Json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("expected an array of rationals");
    }
    std::vector<Rational> out;
    for (const Json &x : j) {
        out.push_back(rational_from_json(x));
    }
    return out;
}

RationalMatrix matrix_from_json(const Json &j) {
    const Json &rows = j.is_object() ? field(j, "rows") : j;
    if (!rows.is_array()) {
        throw std::invalid_argument("matrix must be an array of rows");
    }
    std::vector<std::vector<Rational>> data;
    for (const Json &row : rows) {
        data.push_back(rationals_from_json(row));
        if (data.back().size() != data.front().size()) {
            throw std::invalid_argument("matrix rows must have equal length");
        }
    }
    return RationalMatrix::from_rows(data);
}

ScaledMatrix scaled_from_json(const Json &j) {
    std::vector<Rational> rows = rationals_from_json(field(j, "radicands"));
    RationalMatrix base = matrix_from_json(field(j, "base"));
    std::vector<Rational> cols = j.contains("col_radicands") ? rationals_from_json(j.at("col_radicands"))
                                                             : std::vector<Rational>(base.cols(), Rational(1));
    return ScaledMatrix(rows, base, cols);
}

MoritaElement morita_from_json(const Json &j) {
    MoritaElement g;
    g.a = matrix_from_json(field(j, "a"));
    g.b = matrix_from_json(field(j, "b"));
    g.c = matrix_from_json(field(j, "c"));
    g.d = matrix_from_json(field(j, "d"));
    return g;
}

Json matrix_file(const RationalMatrix &m) {
    Json out = Json::object();
    out["rows"] = to_json(m);
    return out;
}

Json code_to_json(const Code &code) {
    Json out = Json::object();
    if (const auto *s = std::get_if<SimpleLcaCode>(&code)) {
        out["kind"] = "simple";
        out["c"] = to_string(s->c);
        out["d"] = to_string(s->d);
        out["theta"] = to_string(s->theta);
        out["a"] = to_string(s->a);
        out["b"] = to_string(s->b);
        out["K"] = to_string(s->K);
        out["unit_sq"] = to_string(s->unit_sq);
        out["flipped"] = s->flipped;
        return out;
    }
    const GeneralLcaCode &g = std::get<GeneralLcaCode>(code);
    out["kind"] = "general";
    out["p"] = g.p;
    out["k"] = g.k;
    out["m"] = to_string(g.m);
    out["theta"] = to_json(g.theta);
    out["z"] = to_json(g.z);
    out["q"] = to_json(g.q);
    out["r"] = to_json(g.r);
    out["t"] = to_json(g.t);
    out["h"] = to_json(g.h);
    out["cvec"] = to_json(g.cvec);
    out["dvec"] = to_json(g.dvec);
    out["avec"] = to_json(g.avec);
    out["bvec"] = to_json(g.bvec);
    out["t_cv"] = to_json(g.t_cv);
    out["t_dv"] = to_json(g.t_dv);
    out["s_cv"] = to_json(g.s_cv);
    out["s_dv"] = to_json(g.s_dv);
    out["dual"] = to_json(g.dual);
    out["g"] = to_json(g.g);
    out["K"] = to_string(g.K);
    return out;
}

Code code_from_json(const Json &j) {
    const Json &kind = field(j, "kind");
    if (kind == "simple") {
        SimpleLcaCode s;
        s.c = integer_from_json(field(j, "c"));
        s.d = integer_from_json(field(j, "d"));
        s.theta = integer_from_json(field(j, "theta"));
        s.a = integer_from_json(field(j, "a"));
        s.b = integer_from_json(field(j, "b"));
        s.K = integer_from_json(field(j, "K"));
        s.unit_sq = rational_from_json(field(j, "unit_sq"));
        const Json &flipped = field(j, "flipped");
        if (!flipped.is_boolean()) {
            throw std::invalid_argument("'flipped' must be a boolean");
        }
        s.flipped = flipped.get<bool>();
        if (s.c < 1) {
            throw std::invalid_argument("c must be positive");
        }
        return s;
    }
    if (kind != "general") {
        throw std::invalid_argument("'kind' must be \"simple\" or \"general\"");
    }
    GeneralLcaCode g;
    g.p = size_from_json(field(j, "p"));
    g.k = size_from_json(field(j, "k"));
    g.m = integer_from_json(field(j, "m"));
    g.theta = matrix_from_json(field(j, "theta"));
    g.z = matrix_from_json(field(j, "z"));
    g.q = matrix_from_json(field(j, "q"));
    g.r = matrix_from_json(field(j, "r"));
    g.t = integers_from_json(field(j, "t"));
    g.h = integers_from_json(field(j, "h"));
    g.cvec = integers_from_json(field(j, "cvec"));
    g.dvec = integers_from_json(field(j, "dvec"));
    g.avec = integers_from_json(field(j, "avec"));
    g.bvec = integers_from_json(field(j, "bvec"));
    g.t_cv = scaled_from_json(field(j, "t_cv"));
    g.t_dv = matrix_from_json(field(j, "t_dv"));
    g.s_cv = scaled_from_json(field(j, "s_cv"));
    g.s_dv = matrix_from_json(field(j, "s_dv"));
    g.dual = matrix_from_json(field(j, "dual"));
    g.g = morita_from_json(field(j, "g"));
    g.K = integer_from_json(field(j, "K"));

    // Shape checks only; numerical consistency is verify()'s job.
    size_t n = 2 * g.p;
    auto square = [n](const RationalMatrix &m) { return m.rows() == n && m.cols() == n; };
    if (g.p == 0 || !square(g.theta) || !square(g.z) || !square(g.q) || !square(g.r) || !square(g.dual) ||
        !square(g.g.a) || !square(g.g.b) || !square(g.g.c) || !square(g.g.d)) {
        throw std::invalid_argument("general code matrices must be 2p x 2p");
    }
    if (g.cvec.size() != g.k || g.dvec.size() != g.k || g.avec.size() != g.k || g.bvec.size() != g.k ||
        g.h.size() != g.k || g.t.size() != g.p) {
        throw std::invalid_argument("general code vectors have inconsistent lengths");
    }
    // A 0 x n matrix serializes as [], which loses its width.
    if (g.k == 0 && g.t_dv.rows() == 0 && g.s_dv.rows() == 0) {
        g.t_dv = RationalMatrix(0, n);
        g.s_dv = RationalMatrix(0, n);
    }
    for (const Integer &c : g.cvec) {
        if (c < 1) {
            throw std::invalid_argument("qudit dimensions must be positive");
        }
    }
    if (g.t_cv.rows() != n || g.t_cv.cols() != n || g.s_cv.rows() != n || g.s_cv.cols() != n ||
        g.t_dv.rows() != 2 * g.k || g.t_dv.cols() != n || g.s_dv.rows() != 2 * g.k || g.s_dv.cols() != n) {
        throw std::invalid_argument("general code encoders have the wrong shape");
    }
    return g;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

}  // namespace lca::io
