// End-to-end checks of the jpl executable: exit codes, output shapes, and
// byte-determinism of the verification report.

#include <json.hpp>

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = std::string(JPL_TEST_TMPDIR) + "/cli_out.txt";
    std::string cmd = std::string(JPL_CLI_PATH) + " " + args + " > " + out_path +
                      " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("expand") {
    RunResult r = run_cli("expand \"theta(1)\" --prec 48");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("weight 1/2  index 1/2") != std::string::npos);
    CHECK(r.out.find("q^{3/24}") != std::string::npos);

    RunResult one = run_cli("expand \"eta^24/eta^24\"");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("q^{0/24} * ( 1 )") != std::string::npos);

    RunResult js = run_cli("expand \"phi(0,1)\" --prec 72 --json");
    CHECK(js.exit_code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["weight2"] == 0);
    CHECK(j["series"]["terms"][0]["n24"] == 0);
    CHECK(j["series"]["terms"][0]["coeffs"][1]["c"][0] == "10/1");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("expand \"thet(1)\"").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("dim --weight 6").exit_code == 2);
}

TEST_CASE("dim") {
    RunResult r = run_cli("dim --weight 6 --index 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
    CHECK(run_cli("dim --weight 3 --index 8").out == "0\n");
}

TEST_CASE("lift") {
    RunResult r = run_cli("lift \"eta*theta(1)\" --Q 6 --mmax 7 --prec 240");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("t = 3") != std::string::npos);
    CHECK(r.out.find("0 violations") != std::string::npos);
    // incompatible seed
    CHECK(run_cli("lift \"eta*theta(1)\" --Q 2").exit_code == 1);
}

TEST_CASE("group") {
    RunResult r = run_cli("group --t 3 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["abelianization"][0] == 3);
    CHECK(j["abelianization"][1] == 6);
    CHECK(j["characters"] == 18);
}

TEST_CASE("verify is deterministic") {
    RunResult a = run_cli("verify --suite all --json");
    RunResult b = run_cli("verify --suite all --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);  // byte-identical reports
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() > 50);
}

TEST_CASE("genus table") {
    RunResult r = run_cli("genus-table --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    bool saw_t15 = false;
    for (const auto& row : j["rows"])
        if (row["t"] == 15 && row["charOrder"] == 2) {
            saw_t15 = true;
            CHECK(row["forms"].size() == 5);
        }
    CHECK(saw_t15);
    CHECK(j["annotations"].size() == 6);
}
