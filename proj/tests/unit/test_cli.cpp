#include <doctest.h>

#include "cblocks/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace cblocks;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cbtool(std::vector<std::string> args)
{
    args.insert(args.begin(), "cbtool");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("weight lists")
{
    const SimpleAlgebra a1 = SimpleAlgebra::parse("A1");
    CHECK(parse_weight_list(a1, "1,1,1,1").size() == 4);
    CHECK(parse_weight_list(a1, "1^4").size() == 4);
    CHECK(parse_weight_list(a1, "2,1;1 w1").size() == 4);
    const SimpleAlgebra a2 = SimpleAlgebra::parse("A2");
    const auto w = parse_weight_list(a2, "1,0;0,1");
    REQUIRE(w.size() == 2);
    CHECK(w[1] == Weight({0, 1}));
    const SimpleAlgebra g2 = SimpleAlgebra::parse("G2");
    CHECK(parse_weight_list(g2, "w1×6").size() == 6);
    CHECK(parse_weight_list(g2, "w1x6").size() == 6);
    CHECK(parse_weight_list(g2, "0;w2^2").size() == 3);
    CHECK_THROWS_AS(parse_weight_list(a2, ""), InputError);
    CHECK_THROWS_AS(parse_weight_list(a2, "w1^0"), InputError);
    CHECK_THROWS_AS(parse_weight_list(a2, "1,x"), InputError);
}

TEST_CASE("rank and degree commands")
{
    Run r = cbtool({"rank", "--algebra", "A1", "--level", "1", "--weights", "1,1,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    r = cbtool({"rank", "--algebra", "G2", "--level", "1", "--weights", "w1×6"});
    CHECK(r.out == "5\n");
    r = cbtool({"rank", "-g", "A2", "-l", "1", "-w", "1,0", "0,1", "--format", "json"});
    CHECK(json::parse(r.out)["rank"] == "1");
    r = cbtool({"deg4", "--level", "2", "--weights", "2,2,2,2"});
    CHECK(r.out == "2\n");
    r = cbtool({"degree", "--level", "1", "--weights", "1^6", "--fcurve", "1|2|3|4,5,6"});
    CHECK(r.out == "1\n");
    r = cbtool({"degree", "--level", "1", "--weights", "1^5;0", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("fcurve,degree\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 66);
}

TEST_CASE("c1 and symm commands")
{
    Run r = cbtool({"c1", "--level", "1", "--weights", "1,1,1,1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["c1"] == json({{"1,2", "1/3"}, {"1,3", "1/3"}, {"2,3", "1/3"}}));
    CHECK(j["class_is_numerically_zero"] == false);

    r = cbtool({"c1", "--level", "4", "--weights", "1,2,1,2,2"});
    j = json::parse(r.out);
    CHECK(j["class_is_numerically_zero"] == true);
    CHECK(j["c1"].size() <= 10);

    r = cbtool({"symm", "--level", "1", "--weights", "1,1,1,1"});
    CHECK(json::parse(r.out)["symmetrized_c1"]["D_2"] == "8");
}

TEST_CASE("basis command")
{
    for (auto [n, count] : {std::pair{4, 1}, {5, 5}, {6, 16}}) {
        const Run r = cbtool({"basis", "--n", std::to_string(n)});
        CHECK(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["tuples"].size() == static_cast<std::size_t>(count));
        CHECK(j["rank"] == count);
        CHECK(j["is_basis"] == true);
    }
    const Run csv = cbtool({"basis", "--n", "5", "--format", "csv"});
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 6);
}

TEST_CASE("cone command")
{
    Run r = cbtool({"cone", "--n", "5", "--max-level", "2", "--compare-nef"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["nef_generators_inside"] == j["nef_generators"]);
    CHECK(j["extremal_ray_count"] == j["extremal_rays"].size());

    const std::string path = "cli_test_rays.json";
    {
        std::ofstream f(path);
        f << "[[1,0],[1,1],[0,1]]";
    }
    r = cbtool({"cone", "--rays", path});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["extremal_rays"] == json::parse("[[0,1],[1,0]]"));
}

TEST_CASE("verify command")
{
    Run r = cbtool({"verify", "basis", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS basis") != std::string::npos);
    r = cbtool({"verify", "sl2-closed-form", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["passed"] == true);
    r = cbtool({"verify", "no-such-suite"});
    CHECK(r.code == 2);
}

TEST_CASE("errors and exit codes")
{
    Run r = cbtool({"rank", "--level", "1", "--weights", "1,x"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: input:", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

    r = cbtool({"rank", "--level", "1", "--weights", "3"});
    CHECK(r.code == 2);
    r = cbtool({"rank", "--weights", "1,1"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: usage:", 0) == 0);
    r = cbtool({"rank", "--level", "1", "--weights", "1,1", "--n", "3"});
    CHECK(r.code == 2);
    r = cbtool({"frobnicate"});
    CHECK(r.code == 2);
    r = cbtool({"rank", "--level", "1", "--weights", "1,1", "--format", "xml"});
    CHECK(r.code == 2);
    r = cbtool({});
    CHECK(r.code == 2);
    r = cbtool({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rank") != std::string::npos);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args = {"c1", "-g", "A2", "-l", "2", "-w", "1,0;0,1;1,1;1,1;0,0"};
    CHECK(cbtool(args).out == cbtool(args).out);
}
