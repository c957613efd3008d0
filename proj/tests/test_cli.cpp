#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(JP_CLI_PATH) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("enumerate golden lists") {
    auto nine = run("enumerate --length 6 --weight 7 --format json");
    CHECK(nine.exit_code == 0);
    auto parsed = nlohmann::json::parse(nine.output);
    CHECK(parsed.size() == 9);

    auto five = run("enumerate --length 6 --weight 7 --restrict 5 --format json");
    CHECK(five.exit_code == 0);
    CHECK(nlohmann::json::parse(five.output).size() == 5);

    auto empty = run("enumerate --length 0 --weight 0 --format json");
    CHECK(empty.exit_code == 0);
    auto one = nlohmann::json::parse(empty.output);
    REQUIRE(one.size() == 1);
    CHECK(one[0].empty());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("enumerate --length 6").exit_code == 2);
    CHECK(run("enumerate --length -3 --weight -1").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("verify").exit_code == 2);
    CHECK(run("verify no-such-check --profile quick").exit_code == 2);
    CHECK(run("verify --profile nonsense").exit_code == 2);
    CHECK(run("count --K 5").exit_code == 2);
    CHECK(run("count --K 5 --i 1 --j 1").exit_code == 2);
    CHECK(run("series A --K 2 --i 1").exit_code == 2);
    CHECK(run("series wat --K 5 --i 1").exit_code == 2);
    CHECK(run("bijection").exit_code == 2);
}

TEST_CASE("series table carries the golden coefficient") {
    auto r = run("series A --K 5 --i 3 --zmax 10 --qmax 20 --format json");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["z_max"] == 10);
    CHECK(parsed["q_max"] == 20);
    CHECK(parsed["coeffs"][6][7] == "5");
}

TEST_CASE("product series for the odd top index") {
    auto r = run("series product --K 3 --i 2 --qmax 40 --format json");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["coeffs"][0] == "1");

    auto f = run("series F --k 2 --i 2 --format json");
    CHECK(f.exit_code == 0);
    CHECK(nlohmann::json::parse(f.output)["coeffs"][0][0] == "1");
}

TEST_CASE("remaining series kinds") {
    auto stair_a = run("series stair-A --K 3 --i 2 --zmax 6 --qmax 12 --format json");
    CHECK(stair_a.exit_code == 0);
    CHECK(nlohmann::json::parse(stair_a.output)["coeffs"][0][0] == "1");

    auto stair_f = run("series stair-F --k 3 --i 3 --zmax 6 --qmax 12 --format json");
    CHECK(stair_f.exit_code == 0);

    auto jagged = run("series jagged --zmax 6 --qmax 10 --format json");
    CHECK(jagged.exit_code == 0);
    auto parsed = nlohmann::json::parse(jagged.output);
    CHECK(parsed["coeffs"][6][7] == "9");  // the golden nine, unrestricted

    auto alt = run("series alt-product --K 5 --i 3 --qmax 16 --format json");
    CHECK(alt.exit_code == 0);
    CHECK(run("series alt-product --K 4 --i 2 --qmax 16").exit_code == 2);  // K must be odd

    auto b0 = run("series B --K 5 --j 0 --zmax 4 --qmax 4 --format json");
    CHECK(b0.exit_code == 0);
    CHECK(nlohmann::json::parse(b0.output)["coeffs"][0][0] == "0");  // zero series
}

TEST_CASE("z1 specialization enforces the adequacy bound") {
    CHECK(run("series A --K 5 --i 3 --qmax 20 --zmax 5 --z1").exit_code == 3);
    auto ok = run("series A --K 5 --i 3 --qmax 12 --z1 --format json");
    CHECK(ok.exit_code == 0);
    auto parsed = nlohmann::json::parse(ok.output);
    CHECK(parsed["coeffs"][0] == "1");
}

TEST_CASE("verify runs a named check") {
    auto r = run("verify products --K 3 --i 2 --qmax 40");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[PASS] product-identities") != std::string::npos);

    auto j = run("verify products --K 4 --qmax 16 --format json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.output);
    REQUIRE(parsed.is_array());
    for (const auto& rep : parsed) CHECK(rep["status"] == "pass");
}

TEST_CASE("bijection conversions") {
    auto fwd = run("bijection --jagged 2,1,2,1,0,1 --format json");
    CHECK(fwd.exit_code == 0);
    CHECK(nlohmann::json::parse(fwd.output) ==
          nlohmann::json::parse(R"({"alpha":[2,1],"beta":[3,1]})"));

    auto back = run("bijection --alpha 2,1 --beta 3,1 --format json");
    CHECK(back.exit_code == 0);
    CHECK(nlohmann::json::parse(back.output)[0] ==
          nlohmann::json::parse("[2,1,2,1,0,1]"));

    auto wt = run("bijection --weight 8");
    CHECK(wt.exit_code == 0);
    CHECK(wt.output.find("[PASS]") != std::string::npos);

    // a malformed overpartition is a mathematical fault, not a usage error
    CHECK(run("bijection --alpha 1,1 --beta 2").exit_code == 1);
}

TEST_CASE("count emits the CSV schema") {
    auto r = run("count --K 5 --i 3 --length 6 --weight 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("K,i_or_j,m,n,count\n", 0) == 0);
    CHECK(r.output.find("5,3,6,7,5\n") != std::string::npos);

    auto b = run("count --K 5 --j 1 --length 6 --weight 7");
    CHECK(b.exit_code == 0);
    CHECK(b.output.find("5,1,6,7,0\n") != std::string::npos);

    auto seq = run("count --K 5 --i 3 --weight 6 --congruence");
    CHECK(seq.exit_code == 0);
    CHECK(seq.output == "n,count\n0,1\n1,2\n2,4\n3,6\n4,10\n5,16\n6,24\n");
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string path = "/tmp/jp_cli_out_test.json";
    auto direct = run("series A --K 4 --i 2 --zmax 6 --qmax 9 --format json");
    auto to_file = run("series A --K 4 --i 2 --zmax 6 --qmax 9 --format json --out " + path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::string content;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) content.append(buf, got);
    fclose(f);
    remove(path.c_str());
    // stdout appends a final newline for terminal friendliness; the file holds
    // the exact payload
    CHECK(direct.output == content + "\n");
}

TEST_CASE("identical config produces byte-identical output") {
    const std::string cmd = "series B --K 5 --j 4 --zmax 8 --qmax 14 --format json";
    auto first = run(cmd);
    auto second = run(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    const std::string vcmd = "verify series-recurrence --K 4 --zmax 8 --qmax 12 --format json";
    auto v1 = run(vcmd);
    auto v2 = run(vcmd);
    CHECK(v1.exit_code == 0);
    CHECK(v1.output == v2.output);
}

TEST_CASE("threaded verify output matches the single-threaded order") {
    const std::string base = "verify andrews-recurrence even-factorization --zmax 6 --qmax 10";
    auto seq = run(base + " --threads 1");
    auto par = run(base + " --threads 4");
    CHECK(seq.exit_code == 0);
    CHECK(seq.output == par.output);
}
