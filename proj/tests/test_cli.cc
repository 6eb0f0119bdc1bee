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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "lca/catalog.h"
#include "serialize.h"
#include "test_util.h"

using namespace lca;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
   public:
    Scratch() {
        std::random_device rd;
        dir_ = fs::temp_directory_path() / ("lcacode_cli_" + std::to_string(rd()));
        fs::create_directories(dir_);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }
    std::string read(const std::string &name) const {
        std::ifstream in(path(name));
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

   private:
    fs::path dir_;
};

std::string matrix_text(const RationalMatrix &m) {
    return io::matrix_file(m).dump();
}

}  // namespace

TEST(cli, simple_then_verify) {
    Scratch s;
    Result r = run_cli({"simple", "--c", "3", "--d", "2", "--theta", "0", "--out", s.path("c.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    r = run_cli({"verify", s.path("c.json")});
    EXPECT_EQ(r.code, 0) << r.err;
    io::Json report = io::Json::parse(r.out);
    EXPECT_EQ(report["K"], "2");
    EXPECT_TRUE(report["ok"].get<bool>());
}

TEST(cli, corrupted_code_file_fails_verification) {
    Scratch s;
    ASSERT_EQ(run_cli({"simple", "--c", "5", "--d", "3", "--theta", "1", "--out", s.path("c.json")}).code, 0);
    io::Json j = io::read_json_file(s.path("c.json"));
    j["a"] = "7";
    s.write("bad.json", j.dump());
    Result r = run_cli({"verify", s.path("bad.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(io::Json::parse(r.out)["ok"].get<bool>());

    ASSERT_EQ(run_cli({"build", "--theta", s.write("t.json", matrix_text(RationalMatrix{{0, 2}, {-2, 0}})), "--z",
                       s.write("z.json", R"({"rows": [["0", "-1/3"], ["1/3", "0"]]})"), "--out", s.path("g.json")})
                  .code,
              0);
    j = io::read_json_file(s.path("g.json"));
    EXPECT_EQ(run_cli({"verify", s.path("g.json")}).code, 0);
    j["dual"][0][1] = "5/7";
    s.write("gbad.json", j.dump());
    EXPECT_EQ(run_cli({"verify", s.path("gbad.json")}).code, 2);
}

TEST(cli, malformed_input_exits_one) {
    Scratch s;
    EXPECT_EQ(run_cli({"verify", s.path("missing.json")}).code, 1);
    EXPECT_EQ(run_cli({"verify", s.write("junk.json", "{not json")}).code, 1);
    EXPECT_EQ(run_cli({"verify", s.write("kind.json", R"({"kind": "torus"})")}).code, 1);
    EXPECT_EQ(run_cli({"smith", "--a", s.write("q.json", R"({"rows": [["0", "1/0"], ["0", "0"]]})")}).code, 1);
    EXPECT_EQ(run_cli({"smith", "--a", s.write("r.json", R"({"rows": [["0", "1"], ["0"]]})")}).code, 1);
    EXPECT_EQ(run_cli({"simple", "--c", "4", "--d", "2", "--theta", "0"}).code, 1);
    EXPECT_EQ(run_cli({"simple", "--c", "x", "--d", "2", "--theta", "0"}).code, 1);
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(cli, code_file_round_trip) {
    std::mt19937_64 rng(71);
    std::vector<io::Code> codes{simple_code(3, 2, 0), simple_code(7, -4, 0), to_general(simple_code(5, 3, 1)),
                                binary_code_lca(RationalMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}}),
                                standard_form_multi({2, 3}, {1, 2}, {1, 0})};
    for (int i = 0; i < 10; i++) {
        auto [theta, z] = lca_test::random_code_input(rng, 2);
        codes.push_back(build_general(theta, z));
    }
    for (const io::Code &code : codes) {
        io::Json j = io::code_to_json(code);
        io::Code back = io::code_from_json(io::Json::parse(j.dump()));
        ASSERT_EQ(io::code_to_json(back).dump(), j.dump());
        if (const auto *g = std::get_if<GeneralLcaCode>(&back)) {
            const GeneralLcaCode &orig = std::get<GeneralLcaCode>(code);
            ASSERT_TRUE(g->t_cv.equals(orig.t_cv));
            ASSERT_TRUE(g->s_cv.equals(orig.s_cv));
            ASSERT_EQ(g->t_cv.radicands(), orig.t_cv.radicands());
            ASSERT_EQ(g->dual, orig.dual);
            ASSERT_EQ(g->g, orig.g);
            ASSERT_TRUE(verify(*g).ok());
        } else {
            const SimpleLcaCode &a = std::get<SimpleLcaCode>(back), &b = std::get<SimpleLcaCode>(code);
            ASSERT_EQ(a.c, b.c);
            ASSERT_EQ(a.d, b.d);
            ASSERT_EQ(a.theta, b.theta);
            ASSERT_EQ(a.K, b.K);
            ASSERT_EQ(a.unit_sq, b.unit_sq);
            ASSERT_EQ(a.flipped, b.flipped);
        }
    }
}

TEST(cli, monte_carlo_noiseless_csv) {
    Scratch s;
    ASSERT_EQ(run_cli({"simple", "--c", "3", "--d", "2", "--theta", "0", "--out", s.path("c.json")}).code, 0);
    Result r = run_cli({"decode-mc", s.path("c.json"), "--strategy", "pure", "--sigma", "0", "--px", "0", "--pz", "0",
                        "--trials", "1000", "--seed", "7", "--out", s.path("mc.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(s.read("mc.csv"), std::string(cli::kMonteCarloHeader) + "\npure,3,2,0,0,0,0,1000,0,0\n");
    EXPECT_EQ(io::Json::parse(r.out)["failures"], 0);
}

TEST(cli, monte_carlo_csv_is_byte_identical) {
    Scratch s;
    ASSERT_EQ(run_cli({"simple", "--c", "3", "--d", "2", "--theta", "0", "--out", s.path("c.json")}).code, 0);
    std::vector<std::string> base{"decode-mc", s.path("c.json"), "--strategy", "qudit", "--sigma", "0.4",
                                  "--px", "0.05", "--pz", "0.05", "--trials", "4000", "--seed", "99"};
    auto with = [&](std::vector<std::string> extra) {
        std::vector<std::string> args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return args;
    };
    ASSERT_EQ(run_cli(with({"--out", s.path("a.csv")})).code, 0);
    ASSERT_EQ(run_cli(with({"--out", s.path("b.csv")})).code, 0);
    ASSERT_EQ(run_cli(with({"--threads", "4", "--out", s.path("c.csv")})).code, 0);
    EXPECT_EQ(s.read("a.csv"), s.read("b.csv"));
    EXPECT_EQ(s.read("a.csv"), s.read("c.csv"));
    std::string header = s.read("a.csv").substr(0, s.read("a.csv").find('\n'));
    EXPECT_EQ(header, "strategy,c,d,theta,sigma,p_x,p_z,trials,failures,rate");

    EXPECT_EQ(run_cli(with({"--threads", "0"})).code, 1);
    EXPECT_EQ(run_cli({"decode-mc", s.path("c.json"), "--strategy", "greedy"}).code, 1);
}

TEST(cli, decode_sweep_csv) {
    Scratch s;
    ASSERT_EQ(run_cli({"simple", "--c", "3", "--d", "2", "--theta", "0", "--out", s.path("c.json")}).code, 0);
    Result r = run_cli({"decode-sweep", s.path("c.json"), "--strategy", "qudit", "--grid", "5", "--out", s.path("g.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    io::Json summary = io::Json::parse(r.out);
    EXPECT_EQ(summary["cells"], 9 * 25);
    EXPECT_EQ(summary["failures"], 0);
    std::string csv = s.read("g.csv");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 9 * 25);
}

TEST(cli, gates_and_lift) {
    Scratch s;
    ASSERT_EQ(run_cli({"simple", "--c", "3", "--d", "2", "--theta", "0", "--out", s.path("c.json")}).code, 0);
    Result r = run_cli({"hadamard", s.path("c.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(io::Json::parse(r.out)["ok"].get<bool>());

    r = run_cli({"gate", s.path("c.json"), "--w", s.write("w.json", matrix_text(RationalMatrix{{1, 0}, {2, 1}}))});
    ASSERT_EQ(r.code, 0) << r.err;
    io::Json j = io::Json::parse(r.out);
    EXPECT_EQ(io::matrix_from_json(j["logical_action"]), RationalMatrix::identity(2));
    EXPECT_EQ(run_cli({"gate", s.path("c.json"), "--w", s.write("w2.json", matrix_text(RationalMatrix{{1, 0}, {1, 1}}))}).code,
              1);

    r = run_cli({"lift", "--w", s.write("l.json", matrix_text(RationalMatrix{{0, 2}, {1, 0}})), "--c", "3", "--d", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    RationalMatrix lift = io::matrix_from_json(io::Json::parse(r.out)["lift"]);
    EXPECT_EQ(io::Json::parse(r.out)["det"], "1");
    EXPECT_EQ(mod_matrix(lift, 3), (RationalMatrix{{0, 2}, {1, 0}}));
}

TEST(cli, catalog_commands) {
    Scratch s;
    Result r = run_cli({"catalog", "e8"});
    ASSERT_EQ(r.code, 0);
    io::Json j = io::Json::parse(r.out);
    EXPECT_EQ(j["det"], "1");
    EXPECT_TRUE(j["symplectic_block_ordering"].get<bool>());
    EXPECT_FALSE(j["symplectic_interleaved_ordering"].get<bool>());

    r = run_cli({"catalog", "binary", "--g", s.write("g.json", matrix_text(RationalMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}})),
                 "--out", s.path("b.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(run_cli({"verify", s.path("b.json")}).code, 0);

    r = run_cli({"catalog", "commutation", "--a", s.write("a.json", R"({"rows": [["0", "-2/3"], ["2/3", "0"]]})"),
                 "--theta-vec", "0", "--out", s.path("cm.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    io::Json code = io::read_json_file(s.path("cm.json"));
    EXPECT_EQ(code["cvec"], io::Json::parse(R"(["3"])"));
    EXPECT_EQ(code["dvec"], io::Json::parse(R"(["2"])"));

    r = run_cli({"smith", "--a", s.path("a.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(io::Json::parse(r.out)["m"], "3");
    EXPECT_EQ(io::Json::parse(r.out)["h"], io::Json::parse(R"(["2"])"));

    EXPECT_EQ(run_cli({"catalog"}).code, 1);
}

TEST(cli, logicals_and_distance) {
    Scratch s;
    ASSERT_EQ(run_cli({"simple", "--c", "3", "--d", "2", "--theta", "1", "--out", s.path("c.json")}).code, 0);
    Result r = run_cli({"logicals", s.path("c.json")});
    ASSERT_EQ(r.code, 0);
    io::Json j = io::Json::parse(r.out);
    EXPECT_EQ(j["K"], "5");
    EXPECT_EQ(j["logical_commutator_order"], "5");
    r = run_cli({"distance", s.path("c.json")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(io::Json::parse(r.out)["distance_sq_over_2pi"], "3/5");

    ASSERT_EQ(run_cli({"catalog", "e8"}).code, 0);
    ASSERT_EQ(run_cli({"catalog", "commutation", "--a", s.write("z.json", R"({"rows": [["0", "0"], ["0", "0"]]})"),
                       "--out", s.path("gkp.json")})
                  .code,
              0);
    EXPECT_EQ(run_cli({"distance", s.path("gkp.json")}).code, 1);
    EXPECT_EQ(run_cli({"logicals", s.path("gkp.json")}).code, 0);
}
