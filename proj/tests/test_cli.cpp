#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bh/cli.hpp"

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "braidhom");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    auto parsed = bh::cli::parse_args(static_cast<int>(argv.size()), argv.data(), out, err);
    r.code = parsed.exit_code ? *parsed.exit_code : bh::cli::run(parsed.config, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("range and zeta parsing") {
    auto r = bh::cli::parse_range("2..5");
    CHECK(r.lo == 2);
    CHECK(r.hi == 5);
    CHECK(r.values().size() == 4);
    CHECK(bh::cli::parse_range("7").values() == std::vector<int>{7});
    CHECK_THROWS(bh::cli::parse_range("5..3"));
    CHECK_THROWS(bh::cli::parse_range("2..x"));
    CHECK_THROWS(bh::cli::parse_range(""));
    CHECK(bh::cli::parse_zeta("6/5") == std::pair{6, 5});
    CHECK(bh::cli::parse_zeta("4") == std::pair{4, 1});
    CHECK_THROWS(bh::cli::parse_zeta("0/1"));
    CHECK_THROWS(bh::cli::parse_zeta("3/"));
}

TEST_CASE("verify over a grid") {
    const auto r = invoke({"verify", "--q", "3..9", "--n", "2..5", "--d", "2..4", "--jobs", "2"});
    CHECK(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["all_pass"] == true);
    std::size_t expected = 0;
    for (int q : {3, 4, 5, 7, 8, 9})
        for (int d = 2; d <= 4; ++d) expected += std::gcd(q, d) == 1 ? 4 : 0;
    CHECK(j["results"].size() == expected);
    CHECK(r.err.find("q = 6") != std::string::npos);
    const auto bad = invoke({"verify", "--n", "1..3"});
    CHECK(bad.code == 2);
}

TEST_CASE("count output formats") {
    auto r = invoke({"count", "--q", "3", "--n", "2", "--d", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("q,n,d,squarefree_count,total", 0) == 0);
    CHECK(r.out.find("\n3,2,2,6,12,2,1,") != std::string::npos);
    r = invoke({"count", "--q", "3", "--n", "3", "--d", "2", "--dump"});
    CHECK(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["results"][0]["polynomials"].size() == 18);
    CHECK(j["results"][0]["total"] == 54);
    CHECK(j["results"][0]["average"]["num"] == 3);
    CHECK(invoke({"count", "--dump", "--format", "csv"}).code == 2);
    CHECK(invoke({"count", "--format", "xml"}).code == 2);
}

TEST_CASE("moments command") {
    const auto r = invoke({"moments", "--q", "3", "--n", "3", "--d", "2", "--m", "4"});
    CHECK(r.code == 0);
    const auto m = json_of(r)["results"][0]["moments"];
    CHECK(m[1]["value"]["num"] == 35);
    CHECK(m[1]["value"]["den"] == 3);
    CHECK(invoke({"moments", "--m", "0"}).code == 2);
}

TEST_CASE("homology command reproduces the published rows") {
    auto r = invoke({"homology", "--group", "braid", "--n", "4"});
    CHECK(r.code == 0);
    auto j = json_of(r)["results"][0];
    CHECK(j["expected_match"] == true);
    CHECK(j["degrees"][0]["factors"].empty());
    CHECK(j["degrees"][1]["factors"] == nlohmann::json::array({"t-1"}));
    CHECK(j["degrees"][2]["factors"].size() == 1);
    CHECK(j["degrees"][3]["factors"].empty());

    r = invoke({"homology", "--group", "typeB", "--n", "2..4", "--jobs", "3"});
    CHECK(r.code == 0);
    for (const auto& e : json_of(r)["results"]) CHECK(e["ss_consistency"] == true);

    r = invoke({"homology", "--n", "3..5", "--zeta", "2/1"});
    CHECK(r.code == 0);
    const auto z = json_of(r)["results"];
    CHECK(z[1]["dims"] == nlohmann::json::array({0, 0, 1, 1}));

    r = invoke({"homology", "--n", "4", "--d", "2..3"});
    CHECK(r.code == 0);
    const auto dt = json_of(r)["results"];
    CHECK(dt[0]["total_space_betti"] == nlohmann::json::array({1, 1, 0, 1, 1}));
    CHECK(dt[1]["total_space_betti"] == nlohmann::json::array({1, 1, 0, 0, 0}));

    r = invoke({"homology", "--group", "braid", "--system", "trivial", "--n", "2..5"});
    CHECK(r.code == 0);
}

TEST_CASE("homology usage errors") {
    CHECK(invoke({"homology", "--group", "typeB", "--zeta", "3"}).code == 2);
    CHECK(invoke({"homology", "--group", "D"}).code == 2);
    CHECK(invoke({"homology", "--n", "9"}).code == 2);
    CHECK(invoke({"homology", "--format", "csv"}).code == 2);
    CHECK(invoke({"homology", "--zeta", "3", "--d", "2"}).code == 2);
    CHECK(invoke({"homology", "--system", "rank1"}).code == 2);
    CHECK(invoke({"homology", "--zeta", "x"}).code == 2);
}

TEST_CASE("burau command") {
    const auto a = invoke({"burau", "--n", "3", "--word", "1 2 1"});
    const auto b = invoke({"burau", "--n", "3", "--word", "2 1 2"});
    CHECK(a.code == 0);
    CHECK(json_of(a)["matrix"] == json_of(b)["matrix"]);
    const auto c = invoke({"burau", "--n", "4", "--word", "1 -2 3", "--cover", "--zeta", "6/1"});
    CHECK(c.code == 0);
    CHECK(json_of(c)["cover_agrees"] == true);
    CHECK(json_of(c)["specialized"]["rows"] == 3);
    CHECK(invoke({"burau", "--n", "3", "--word", "1 4"}).code == 2);
    CHECK(invoke({"burau", "--n", "2..3"}).code == 2);
}

TEST_CASE("salvetti export") {
    const auto r = invoke({"salvetti-export", "--group", "braid", "--n", "3"});
    CHECK(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["ranks"] == nlohmann::json::array({2, 4, 2}));
    CHECK(j["boundaries"].size() == 2);
    CHECK(j["ring"] == "laurent");
    CHECK(j["cells"][1] == nlohmann::json::array({nlohmann::json::array({1}), nlohmann::json::array({2})}));
    const auto z = invoke({"salvetti-export", "--n", "3", "--zeta", "3"});
    CHECK(json_of(z)["ring"] == "cyclotomic");
    const auto t = invoke({"salvetti-export", "--group", "typeB", "--n", "2", "--system", "trivial"});
    CHECK(json_of(t)["ring"] == "rational");
}

TEST_CASE("help, unknown flags and missing subcommands") {
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"count", "--help"}).code == 0);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"count", "--bogus"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"count", "--n", "3..1"}).code == 2);
    CHECK(invoke({"count", "--jobs", "-1"}).code == 2);
}

TEST_CASE("environment overrides") {
    setenv("BH_JOBS", "many", 1);
    CHECK(invoke({"count"}).code == 2);
    setenv("BH_JOBS", "2", 1);
    CHECK(invoke({"count"}).code == 0);
    unsetenv("BH_JOBS");
}

TEST_CASE("output is deterministic and independent of the worker count") {
    const std::vector<std::string> base = {"count", "--q", "2..5", "--n", "1..4", "--d", "1..3"};
    auto one = base, many = base;
    one.insert(one.end(), {"--jobs", "1"});
    many.insert(many.end(), {"--jobs", "4"});
    const auto a = invoke(one), b = invoke(many), c = invoke(one);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    const auto h1 = invoke({"homology", "--n", "2..5", "--jobs", "1"});
    const auto h4 = invoke({"homology", "--n", "2..5", "--jobs", "4"});
    CHECK(h1.out == h4.out);
}

TEST_CASE("--out and fixture freezing") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "bh_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto file = (dir / "v.json").string();
    const auto r = invoke({"verify", "--out", file});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(nlohmann::json::parse(slurp(file))["all_pass"] == true);

    const auto fx = (dir / "fixtures").string();
    CHECK(invoke({"fixtures", "--fixtures", fx}).code == 0);
    CHECK(fs::exists(dir / "fixtures" / "burau_homology.json"));
    const auto before = slurp(dir / "fixtures" / "count_grid.json");
    CHECK(invoke({"fixtures", "--fixtures", fx}).code == 2);
    CHECK(invoke({"fixtures", "--fixtures", fx, "--force"}).code == 0);
    CHECK(slurp(dir / "fixtures" / "count_grid.json") == before);
    fs::remove_all(dir);
}

TEST_CASE("checked-in fixtures match a fresh regeneration byte for byte") {
    namespace fs = std::filesystem;
    const fs::path dir(BH_FIXTURE_DIR);
    const auto files = bh::cli::fixture_contents(0);
    CHECK(files.size() == 6);
    for (const auto& [name, text] : files) {
        CAPTURE(name);
        REQUIRE(fs::exists(dir / name));
        CHECK(slurp(dir / name) == text);
    }
}
