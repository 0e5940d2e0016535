#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "plethora/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = plethora::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &content)
{
    const auto path = std::filesystem::temp_directory_path() / ("plethora_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_CASE("pe")
{
    const Outcome r = run({"pe", "--diamond", "P1", "--order", "2", "--method", "product"});
    CHECK(r.code == 0);
    CHECK(r.out == "t^0: 1\nt^1: 1 + u*v\nt^2: 1 + u*v + u^2*v^2\n");
    for (const char *d : {"P1", "P2", "elliptic"}) {
        const std::string product = run({"pe", "--diamond", d, "--method", "product"}).out;
        CHECK(run({"pe", "--diamond", d, "--method", "hn"}).out == product);
        CHECK(run({"pe", "--diamond", d, "--method", "coloring"}).out == product);
    }
    const std::string poly = run({"pe", "--poly", "1 - u + 2*u*v", "--order", "3", "--method", "product"}).out;
    CHECK(run({"pe", "--poly", "1 - u + 2*u*v", "--order", "3", "--method", "hn"}).out == poly);
    CHECK(run({"pe", "--poly", "1 - u + 2*u*v", "--order", "3", "--method", "coloring"}).out == poly);
    const Outcome inline_diamond = run({"pe", "--inline", R"({"dim":1,"h":[[0,0,1],[1,1,1]]})", "--order", "2"});
    CHECK(inline_diamond.out == r.out);
}

TEST_CASE("json output")
{
    const Outcome r = run({"--format", "json", "pe", "--diamond", "P1", "--order", "1"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["order"] == 1);
    CHECK(j["coeffs"][1] == "1 + u*v");
    CHECK(run({"pe", "--diamond", "P1", "--order", "1", "--format", "json"}).out == r.out);
}

TEST_CASE("pl and charvar read series")
{
    const std::string series = temp_file("series.json", R"({"order": 3, "coeffs": ["1", "1", "1", "1"]})");
    const Outcome r = run({"pl", "--series", series});
    CHECK(r.code == 0);
    CHECK(r.out == "t^0: 0\nt^1: 1\nt^2: 0\nt^3: 0\n");
    const Outcome full = run({"charvar", "--direction", "full-from-irr", "--inline", R"({"order": 2, "coeffs": ["0", "1 + u*v", "0"]})"});
    CHECK(full.out == "t^0: 1\nt^1: 1 + u*v\nt^2: 1 + u*v + u^2*v^2\n");
    CHECK(run({"charvar", "--direction", "irr-from-full", "--series", series, "--order", "2"}).out == "t^0: 0\nt^1: 1\nt^2: 0\n");
    CHECK(run({"charvar", "--direction", "irr-from-full", "--inline", R"({"order": 1, "coeffs": ["0", "1"]})"}).code == 2);
}

TEST_CASE("csf and color-sum")
{
    const std::string k3 = temp_file("K3.json", R"({"n": 3, "edges": [[0,1],[1,2],[0,2]]})");
    CHECK(run({"csf", "--graph", k3}).out == "p1^3 - 3*p1*p2 + 2*p3\n");
    CHECK(run({"csf", "--graph", "K3"}).out == "p1^3 - 3*p1*p2 + 2*p3\n");
    CHECK(run({"csf", "--inline", R"({"n": 1, "edges": [], "weights": [3]})"}).out == "p3\n");
    const Outcome c = run({"color-sum", "--graph", "K2", "--poly", "-(1+u*v)", "--order", "2"});
    CHECK(c.out == "t^0: 0\nt^1: 0\nt^2: 2 + 2*u*v + 2*u^2*v^2\n");
}

TEST_CASE("conf")
{
    CHECK(run({"conf", "--mode", "ordered", "--diamond", "P1", "--n", "2"}).out == "u*v + u^2*v^2\n");
    CHECK(run({"conf", "--mode", "ordered", "--poly", "1 + u*v", "--n", "2"}).out == "u*v + u^2*v^2\n");
    CHECK(run({"conf", "--mode", "equivariant", "--diamond", "P1", "--cycle-type", "2,1"}).out == "-u*v + u^3*v^3\n");
    CHECK(run({"conf", "--mode", "sign", "--diamond", "P1", "--order", "2"}).out == "t^0: 1\nt^1: 1 + u*v\nt^2: u*v\n");
    CHECK(run({"conf", "--mode", "unordered", "--diamond", "P1", "--order", "2"}).out == "t^0: 1\nt^1: 1 + u*v\nt^2: u^2*v^2\n");
    CHECK(run({"conf", "--mode", "ordered", "--diamond", "elliptic", "--n", "1", "--signed"}).out == "1 - u - v + u*v\n");
    CHECK(run({"conf", "--mode", "equivariant", "--diamond", "P1", "--cycle-type", "2,x"}).code == 2);
    CHECK(run({"conf", "--mode", "equivariant", "--diamond", "P1"}).code == 2);
}

TEST_CASE("abc and basis")
{
    CHECK(run({"abc", "--diamond", "P2"}).out == "A^2 - C\n");
    CHECK(run({"abc", "--diamond", "P2", "--birational"}).out == "A^2\n");
    CHECK(run({"abc", "--diamond", "elliptic"}).out == "A + B\n");
    CHECK(run({"abc", "--inline", R"({"dim":1,"h":[[0,0,1],[1,0,1]]})"}).code == 2);
    CHECK(run({"basis", "--family", "complete", "--n", "2"}).out == "(1,1) 1\n(2) -1/2\n");
    const std::string fam = temp_file("family.json",
                                      R"([{"n":1,"edges":[]},{"n":2,"edges":[[0,1]]}])");
    CHECK(run({"basis", "--family", fam, "--n", "2"}).out == "(1,1) 1\n(2) -1/2\n");
    const Outcome j = run({"--format", "json", "basis", "--family", "path", "--n", "1"});
    CHECK(nlohmann::json::parse(j.out)["terms"][0]["coeff"] == "1");
}

TEST_CASE("verify")
{
    const Outcome r = run({"verify", "three-way", "--order", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("three-way: pass") != std::string::npos);
    const Outcome all = run({"verify", "all", "--order", "3"});
    CHECK(all.code == 0);
    CHECK(run({"verify", "all", "--order", "3"}).out == all.out);
    const auto j = nlohmann::json::parse(run({"--format", "json", "verify", "config", "--order", "3"}).out);
    CHECK(j["passed"] == true);
    CHECK(run({"verify", "nonsense"}).code == 2);
}

TEST_CASE("input errors exit with code 2 and one line")
{
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"pe", "--diamond", "nowhere"},
             {"csf", "--inline", "{\"n\": 2,"},
             {"csf", "--inline", "{\"n\": 2, \"edges\": [[0, 0]]}"},
             {"pe", "--poly", "1 + w"},
             {"pe", "--diamond", "P1", "--method", "magic"},
             {"color-sum", "--graph", "K2", "--poly", "u/2"},
             {"pe"},
             {},
             {"frobnicate"},
         }) {
        const Outcome r = run(args);
        CHECK(r.code == 2);
        CHECK(r.err.rfind("error: ", 0) == 0);
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
}

TEST_CASE("guard violations exit with code 2")
{
    setenv("PLETHORA_MAX_STATES", "100", 1);
    const Outcome r = run({"pe", "--diamond", "P2", "--method", "coloring", "--order", "4"});
    unsetenv("PLETHORA_MAX_STATES");
    CHECK(r.code == 2);
    CHECK(r.err.find("cs_coloring_sum") != std::string::npos);
}

TEST_CASE("help")
{
    const Outcome r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}
