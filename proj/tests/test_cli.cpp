#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult
{
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string &args)
{
    const std::string cmd = std::string(MAPPELL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.output.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string &name, const std::string &content)
{
    const std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("charlier command")
{
    auto r = run("charlier --n 1,0 --a 1,2 --basis monomial");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x - 1\n");

    r = run("charlier --n 0,0 --a 1,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");

    r = run("--format json charlier --n 1,1 --a 1,2 --basis ff");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["basis"] == "ff");
    CHECK(j["coeffs"] == nlohmann::json::array({"2", "-3", "1"}));

    CHECK(run("charlier --n 1,0 --a nonsense").exit_code == 2);
    CHECK(run("charlier --n 1,0,0 --a 1,2").exit_code == 2);
}

TEST_CASE("verify command")
{
    auto r = run("--format json --max-degree 4 verify --suite all --a 1,2");
    CHECK(r.exit_code == 0);
    // JSON-lines, each with a verdict.
    std::size_t lines = 0;
    std::size_t pos = 0;
    while (pos < r.output.size()) {
        const std::size_t end = r.output.find('\n', pos);
        const auto j = nlohmann::json::parse(r.output.substr(pos, end - pos));
        CHECK(j.contains("verdict"));
        CHECK(j["verdict"] != "fail");
        pos = end + 1;
        ++lines;
    }
    CHECK(lines > 0);

    CHECK(run("--max-degree 0 verify --suite recurrences --a 1,1").exit_code == 0);

    // Repeated parameters warn but pass.
    r = run("--format json --max-degree 4 verify --suite orthogonality --a 2,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"warn\"") != std::string::npos);
}

TEST_CASE("appell command")
{
    const std::string good = write_temp("mappell_seed_ok.json", R"({
      "omega": "1", "arity": 2, "order": 2,
      "coeffs": [["1", "-2", "4"], ["-1", "2", "0"], ["1", "0", "0"]]
    })");
    auto r = run("appell --seed-file " + good + " --action check --max-degree 2");
    CHECK(r.exit_code == 0);

    r = run("appell --seed-file " + good + " --action build --max-degree 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("P(0,0)") != std::string::npos);

    const std::string degenerate = write_temp("mappell_seed_bad.json", R"({
      "omega": "1", "arity": 2, "order": 1,
      "coeffs": [["0", "1"], ["1", "0"]]
    })");
    CHECK(run("appell --seed-file " + degenerate + " --action build").exit_code == 2);

    const std::string garbage = write_temp("mappell_seed_garbage.json", "{not json");
    CHECK(run("appell --seed-file " + garbage + " --action build").exit_code == 2);
}

TEST_CASE("recurrence command")
{
    auto r = run("recurrence --a 1,2 --window 3 --direction 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("m,n,E,F,G,status") != std::string::npos);
    // E = 1+m+n, F = m, G = 2n; e.g. (1,1) -> 3,1,2.
    CHECK(r.output.find("1,1,3,1,2,ok") != std::string::npos);
    CHECK(r.output.find("0,0,1,0,0,ok") != std::string::npos);

    // Rank-deficient input: informational without --strict, exit 1 with it.
    const std::string basis_seed = write_temp("mappell_seed_delta.json", R"({
      "omega": "1", "arity": 2, "order": 4,
      "coeffs": [["1","0","0","0","0"],["0","0","0","0","0"],["0","0","0","0","0"],
                 ["0","0","0","0","0"],["0","0","0","0","0"]]
    })");
    r = run("recurrence --seed-file " + basis_seed + " --window 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("rank-deficient") != std::string::npos);
    CHECK(run("--strict recurrence --seed-file " + basis_seed + " --window 3").exit_code == 1);
}

TEST_CASE("table command")
{
    const auto r = run("--max-degree 1 table --a 1,2 --x 0,1,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n1,n2,x,value") != std::string::npos);
    // C_{1,0} = x - 1 at x = 0,1,2.
    CHECK(r.output.find("1,0,0,-1") != std::string::npos);
    CHECK(r.output.find("1,0,1,0") != std::string::npos);
    CHECK(r.output.find("1,0,2,1") != std::string::npos);
    // C_{0,0} = 1 and C_{1,1}(0) = a1 a2 = 2 shows in the full sweep.
    CHECK(r.output.find("0,0,0,1") != std::string::npos);
}

TEST_CASE("json polynomial output round-trips")
{
    const auto r = run("--format json charlier --n 2,1 --a 1/3,5/7");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    // Re-serialize and compare bit-identically.
    CHECK(nlohmann::json::parse(j.dump()) == j);
    CHECK(j["omega"] == "1");
    for (const auto &c : j["coeffs"]) {
        CHECK(c.is_string());
    }
}
