#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HIBI_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path dir = fs::temp_directory_path() / "hibi_cli_tests";
    fs::create_directories(dir);
    fs::path file = dir / name;
    std::ofstream(file) << content;
    return file;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("analyze") {
    auto file = write_temp("antichain2.json", R"({"elements": ["a","b"], "relations": []})");
    auto res = run_cli("analyze -i " + file.string());
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["report"]["regularity"] == 2);
    CHECK(j["report"]["krull_dim"] == 3);
    CHECK(j["report"]["proj_dim"] == 0);
    CHECK(j["report"]["flags"]["gorenstein"] == true);
    CHECK(j["generators"] == 1);
    CHECK(j["two_chain_regularity"] == 2);

    SUBCASE("text format") {
        auto text = run_cli("analyze --format text -i " + file.string());
        CHECK(text.exit_code == 0);
        CHECK(text.out.find("regularity 2") != std::string::npos);
    }
    SUBCASE("output file") {
        auto out_path = fs::temp_directory_path() / "hibi_cli_tests" / "report.json";
        auto res2 = run_cli("analyze -i " + file.string() + " -o " + out_path.string());
        CHECK(res2.exit_code == 0);
        CHECK(res2.out.empty());
        std::ifstream is(out_path);
        nlohmann::json j2;
        is >> j2;
        CHECK(j2["report"]["regularity"] == 2);
    }
}

TEST_CASE("analyze flags chains as zero ideals") {
    auto file = write_temp("chain3.json",
                           R"({"elements": ["a","b","c"], "relations": [["a","b"],["b","c"]]})");
    auto res = run_cli("analyze -i " + file.string());
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["report"]["ideal_is_zero"] == true);
    CHECK(j["two_chain_regularity"].is_null());
}

TEST_CASE("bad input exits 1") {
    auto file = write_temp("broken.json", "{ not json");
    CHECK(run_cli("analyze -i " + file.string()).exit_code == 1);
    CHECK(run_cli("analyze -i /nonexistent/x.json").exit_code == 1);
    auto cyc = write_temp("cycle.json",
                          R"({"elements": ["a","b"], "relations": [["a","b"],["b","a"]]})");
    CHECK(run_cli("analyze -i " + cyc.string()).exit_code == 1);
}

TEST_CASE("cap violations exit 2") {
    std::string elements = R"({"elements": ["a","b","c","d"], "relations": []})";
    auto file = write_temp("antichain4.json", elements);
    CHECK(run_cli("analyze --cap-ideals 3 -i " + file.string()).exit_code == 2);
    SUBCASE("via the environment") {
        setenv("HIBI_CAPS", "ideals=3", 1);
        CHECK(run_cli("analyze -i " + file.string()).exit_code == 2);
        unsetenv("HIBI_CAPS");
    }
    SUBCASE("flag overrides the environment") {
        setenv("HIBI_CAPS", "ideals=3", 1);
        CHECK(run_cli("analyze --cap-ideals 10 -i " + file.string()).exit_code == 0);
        unsetenv("HIBI_CAPS");
    }
}

TEST_CASE("lattice documents analyze through their join-irreducibles") {
    auto b2 = write_temp(
        "b2_lattice.json",
        R"({"elements": ["o","x","y","i"],
            "relations": [["o","x"],["o","y"],["x","i"],["y","i"]], "as_lattice": true})");
    auto res = run_cli("analyze -i " + b2.string());
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["report"]["p_size"] == 2);
    CHECK(j["report"]["regularity"] == 2);
    CHECK(j["report"]["lattice_size"] == 4);

    SUBCASE("non-distributive lattices are rejected") {
        auto m3 = write_temp(
            "m3.json",
            R"({"elements": ["o","a","b","c","i"],
                "relations": [["o","a"],["o","b"],["o","c"],["a","i"],["b","i"],["c","i"]],
                "as_lattice": true})");
        CHECK(run_cli("analyze -i " + m3.string()).exit_code == 1);
        CHECK(run_cli("oracle -i " + m3.string()).exit_code == 1);
    }
}

TEST_CASE("oracle") {
    auto file = write_temp(
        "twochains.json",
        R"({"elements": ["a","b","c","d"], "relations": [["a","b"],["c","d"]]})");
    auto res = run_cli("oracle -i " + file.string());
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["summary"]["h"] == nlohmann::json::array({1, 4, 1}));
    CHECK(j["verdict"] == "MATCH");
    CHECK(j["reg_formula"] == 3);

    SUBCASE("chains get no verdict") {
        auto chain = write_temp("chain2.json",
                                R"({"elements": ["a","b"], "relations": [["a","b"]]})");
        auto res2 = run_cli("oracle -i " + chain.string());
        REQUIRE(res2.exit_code == 0);
        auto j2 = nlohmann::json::parse(res2.out);
        CHECK(j2["ideal_is_zero"] == true);
        CHECK(j2["verdict"].is_null());
        CHECK(j2["summary"]["h"] == nlohmann::json::array({1}));
    }
}

TEST_CASE("census") {
    SUBCASE("regularity two, one line per size") {
        auto res = run_cli("census --reg 2 --simple --nmax 6");
        REQUIRE(res.exit_code == 0);
        CHECK(count_lines(res.out) == 5);
        std::istringstream is(res.out);
        std::string line;
        while (std::getline(is, line)) {
            auto j = nlohmann::json::parse(line);
            CHECK(j["report"]["regularity"] == 2);
        }
    }
    SUBCASE("extremal Gorenstein families") {
        auto res = run_cli("census --k 3 --simple --pure --nmax 8");
        REQUIRE(res.exit_code == 0);
        CHECK(count_lines(res.out) == 4);
    }
    SUBCASE("dot bundle") {
        auto dir = fs::temp_directory_path() / "hibi_cli_tests" / "dots";
        fs::remove_all(dir);
        auto res = run_cli("census --reg 2 --simple --nmax 4 --dot-dir " + dir.string());
        REQUIRE(res.exit_code == 0);
        int files = 0;
        for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
        CHECK(files == 3);
    }
    SUBCASE("range beyond the cap exits 2") {
        CHECK(run_cli("census --nmax 9").exit_code == 2);
    }
}

TEST_CASE("dot") {
    auto file = write_temp("v.json",
                           R"({"elements": ["a","b","c"], "relations": [["a","c"],["b","c"]]})");
    auto res = run_cli("dot -i " + file.string());
    REQUIRE(res.exit_code == 0);
    size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = res.out.find("[label=", pos)) != std::string::npos) ++nodes, ++pos;
    pos = 0;
    while ((pos = res.out.find("->", pos)) != std::string::npos) ++edges, ++pos;
    CHECK(nodes == 3);
    CHECK(edges == 2);

    SUBCASE("lattice view of a lattice-shaped order") {
        auto lat = write_temp(
            "b2.json",
            R"({"elements": ["o","x","y","i"],
                "relations": [["o","x"],["o","y"],["x","i"],["y","i"]], "as_lattice": true})");
        CHECK(run_cli("dot -i " + lat.string()).exit_code == 0);
    }
    SUBCASE("non-lattice order with as_lattice exits 1") {
        auto bad = write_temp("notlattice.json",
                              R"({"elements": ["a","b"], "relations": [], "as_lattice": true})");
        CHECK(run_cli("dot -i " + bad.string()).exit_code == 1);
    }
}
