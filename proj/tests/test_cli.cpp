#include "cli.hpp"

#include <twinwidth/graph.hpp>
#include <twinwidth/ilrep.hpp>
#include <twinwidth/permutation.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace twinwidth;

namespace {
    struct Outcome {
        int code = 0;
        std::string out;
        std::string err;
    };

    // Arguments starting with '@' name files in the test data directory.
    Outcome run_cli(std::vector<std::string> args)
    {
        for (auto& a : args)
            if (!a.empty() && a[0] == '@')
                a = std::string(TEST_DATA_DIR) + "/" + a.substr(1);
        std::vector<const char*> argv{"twinwidth"};
        for (const auto& a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }

    std::string read_file(const std::string& path)
    {
        std::ifstream in(path);
        REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    // TWINWIDTH_UPDATE_GOLDEN=1 rewrites the files instead of comparing.
    void check_golden(const std::vector<std::string>& args, const std::string& golden, int code = 0)
    {
        Outcome r = run_cli(args);
        INFO("stderr: " << r.err);
        CHECK(r.code == code);
        const std::string path = std::string(GOLDEN_DIR) + "/" + golden;
        if (std::getenv("TWINWIDTH_UPDATE_GOLDEN")) {
            std::ofstream(path) << r.out;
            return;
        }
        CHECK(r.out == read_file(path));
    }

    nlohmann::json run_json(const std::vector<std::string>& args)
    {
        Outcome r = run_cli(args);
        INFO("stderr: " << r.err);
        REQUIRE(r.code == 0);
        return nlohmann::json::parse(r.out);
    }
}

TEST_CASE("tww verify accepts the example sequence at width 2")
{
    Outcome r = run_cli({"tww", "verify", "--graph", "@house.g", "--seq", "@house.seq", "--claim", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"verified\":true}\n");
    Outcome wrong = run_cli({"tww", "verify", "--graph", "@house.g", "--seq", "@house.seq", "--claim", "1"});
    CHECK(wrong.code == 1);
    CHECK(wrong.out == "{\"verified\":false}\n");
}

TEST_CASE("ilmatrix reproduces the interval example matrix")
{
    check_golden({"ilmatrix", "--intervals", "@five_points.ivl"}, "five_points.mat");
}

TEST_CASE("generate permgraph of 2 1 is an edge")
{
    Outcome r = run_cli({"generate", "permgraph", "--pi", "2 1"});
    CHECK(r.code == 0);
    CHECK(r.out == "graph g 2 1\nv 1\nv 2\ne 1 2\n");
}

TEST_CASE("golden outputs")
{
    check_golden({"decode", "--intervals", "@five_points.ivl"}, "cli/decode_five_points.g");
    check_golden({"decode", "--chords", "@chords7.chd", "--json"}, "cli/decode_chords7.json");
    check_golden({"condense", "--intervals", "@five_points.ivl", "--json"}, "cli/condense_five_points.json");
    check_golden({"mixed-minor", "--matrix", std::string(GOLDEN_DIR) + "/five_points.mat", "--k", "2", "--json"},
                 "cli/mixed_minor_five_points.json");
    check_golden({"tww", "exact", "--graph", "@house.g", "--json"}, "cli/tww_exact_house.json");
    check_golden({"tww", "greedy", "--graph", "@house.g"}, "cli/tww_greedy_house.txt");
    check_golden({"extract", "perm-submatrix", "--intervals", "@planted2.ivl", "--pi", "2 1", "--json"},
                 "cli/extract_perm.json");
    check_golden({"extract", "circle-witness", "--intervals", "@planted2.ivl", "--kind", "overlap", "--pi", "1 2",
                  "--json"},
                 "cli/extract_circle.json");
    check_golden({"extract", "exposure", "--intervals", "@planted2.ivl", "--pi", "2 1", "--json"},
                 "cli/extract_exposure.json");
    check_golden({"generate", "exposer", "--pi", "2 3 1"}, "cli/exposer_231.ivl");
    check_golden({"generate", "hplus-circle", "--pi", "2 1", "--r", "1"}, "cli/hplus_circle_21.g");
    check_golden({"generate", "hplus-interval", "--pi", "2 1", "--r", "1", "--exponent", "1", "--u-exponent", "1"},
                 "cli/hplus_interval_21.ivl");
    check_golden({"generate", "planted", "--p", "1"}, "cli/planted_1.ivl");
    check_golden({"perturb", "--graph", "@house.g", "--script", "@flip.script"}, "cli/perturb_house.g");
    check_golden({"robustness", "--construction", "circle", "--pi", "2 1", "--r", "1", "--seed", "7", "--samples",
                  "300", "--json"},
                 "cli/robustness_circle.json");
    check_golden({"fo-check", "--formula", "@triangle.fo", "--intervals", "@five_points.ivl", "--json"},
                 "cli/fo_check_five_points.json");
}

TEST_CASE("outputs agree with the library")
{
    auto g = parse_graph(run_cli({"decode", "--intervals", "@five_points.ivl"}).out);
    CHECK(g.edge_count() == 11);
    CHECK(g.adjacent("be", "dd"));
    CHECK(parse_graph(run_cli({"decode", "--intervals", "@five_points.ivl", "--kind", "overlap"}).out).edge_count() == 9);

    for (const char* cmd : {"perm-submatrix", "exposure"}) {
        auto j = run_json({"extract", cmd, "--intervals", "@planted2.ivl", "--pi", "2 1", "--json"});
        CHECK(j["verification"] == "pass");
        CHECK(j["permutation"] == nlohmann::json::array({2, 1}));
    }
    auto c = run_json({"extract", "circle-witness", "--intervals", "@planted2.ivl", "--kind", "overlap", "--pi", "1 2",
                       "--json"});
    CHECK(c["verification"] == "pass");
    CHECK(c["permutation"] == nlohmann::json::array({1, 2}));

    auto ex = parse_intervals(run_cli({"generate", "exposer", "--pi", "2 3 1"}).out);
    CHECK(ex.intervals.size() == 9);

    auto fo = run_json({"fo-check", "--expr", "(exists x (edge x x))", "--graph", "@house.g", "--json"});
    CHECK(fo["value"] == false);

    auto rob = run_json({"robustness", "--construction", "interval", "--pi", "1", "--r", "0", "--exponent", "1",
                         "--u-exponent", "1", "--mode", "exhaustive", "--json"});
    CHECK(rob["scripts_tested"] == 1);
    CHECK(rob["failure_count"] == 0);
}

TEST_CASE("exit codes")
{
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"tww"}).code == 2);
    CHECK(run_cli({"tww", "exact"}).code == 2);
    CHECK(run_cli({"tww", "exact", "--graph", "@no-such-file.g"}).code == 2);
    CHECK(run_cli({"mixed-minor", "--matrix", "@house.g", "--k", "0"}).code == 2);

    Outcome seedless = run_cli({"robustness", "--construction", "circle", "--pi", "2 1", "--r", "1"});
    CHECK(seedless.code == 2);
    CHECK(seedless.err.find("--seed") != std::string::npos);

    Outcome capped = run_cli({"tww", "exact", "--graph", "@house.g", "--cap", "4"});
    CHECK(capped.code == 1);
    CHECK(capped.err.find("cap") != std::string::npos);

    CHECK(run_cli({"decode", "--intervals", "@five_points.ivl", "--chords", "@chords7.chd"}).code == 2);
    CHECK(run_cli({"extract", "circle-witness", "--intervals", "@five_points.ivl", "--kind", "interval", "--pi", "1"}).code ==
          2);
    CHECK(run_cli({"generate", "permgraph", "--pi", "1 1"}).code == 1);
    CHECK(run_cli({"mixed-minor", "--matrix", "@five_points.ivl", "--k", "2"}).code == 1);
}
