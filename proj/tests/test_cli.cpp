#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::ordered_json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd;
    if (!env_prefix.empty()) cmd += "env " + env_prefix + " ";
    cmd += std::string(EULERSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("compute: exact quantities print exact strings") {
    RunResult r = run_cli("compute genocchi 6");
    CHECK(r.code == 0);
    CHECK(r.out == "-3\n");
    r = run_cli("compute dpoly 2");
    CHECK(r.code == 0);
    CHECK(r.out == "2*y^3 - 2*y\n");
    r = run_cli("compute bernoulli 12");
    CHECK(r.code == 0);
    CHECK(r.out == "-691/2730\n");
    r = run_cli("compute rho 1 2 1");
    CHECK(r.code == 0);
    CHECK(r.out == "-1\n");
}

TEST_CASE("compute: numeric quantities honor the default 50-digit precision") {
    RunResult r = run_cli("compute zeta 2");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("1.6449340668482264364724151666460251892189", 0) == 0);
    r = run_cli("compute pi");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("3.14159265358979323846264338327950288419716939937", 0) == 0);
    r = run_cli("compute T 1 2");
    CHECK(r.code == 0);
    CHECK(r.out.find('e') != std::string::npos);  // scientific notation
    r = run_cli("compute tbar 3 --prec 15");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("8.414398322117", 0) == 0);  // 7 zeta(3)
}

TEST_CASE("compute: json and csv formats") {
    RunResult r = run_cli("compute genocchi 8 --format json");
    CHECK(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["target"] == "genocchi 8");
    CHECK(j["value"] == "17");
    r = run_cli("compute genocchi 8 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "target,value\n\"genocchi 8\",17\n");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("verify NOPE").code == 2);
    CHECK(run_cli("compute frobnicate").code == 2);
    CHECK(run_cli("compute T 1").code == 2);          // missing argument
    CHECK(run_cli("compute zeta x").code == 2);       // non-integer
    CHECK(run_cli("verify TS1Q --q 4..2").code == 2); // empty range
    CHECK(run_cli("verify SYM_TS --m 1").code == 2);  // partial parameters
    CHECK(run_cli("verify TS1Q --m 3").code == 2);    // flag not in schema
    CHECK(run_cli("--prec 5 compute pi").code == 2);  // below minimum digits
    CHECK(run_cli("bogus-subcommand").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("compute T 1 1").code == 2);        // outside convergence domain
}

TEST_CASE("verify: single point, text report") {
    const RunResult r = run_cli("verify SYM_TS --m 3 --p 3 --q 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] SYM_TS") != std::string::npos);
    CHECK(r.out.find("summary: passed 1/1") != std::string::npos);
}

TEST_CASE("verify: failing grid point yields exit code 1 and an error record") {
    const RunResult r = run_cli("verify SYM_TS --m 1 --p 1 --q 1 --format json");
    CHECK(r.code == 1);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    const ordered_json rec = ordered_json::parse(lines[0]);
    CHECK(rec["passed"] == false);
    CHECK(rec.contains("error"));
    CHECK(ordered_json::parse(lines[1])["all_passed"] == false);
}

TEST_CASE("verify: range grids and JSON round trip") {
    const RunResult r = run_cli("verify TS1Q --q 2..4 --format json --prec 30");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);  // 3 records + weight summary
    for (const auto& line : lines) {
        const ordered_json j = ordered_json::parse(line);
        CHECK(j.dump() == line);
    }
    const ordered_json last = ordered_json::parse(lines.back());
    CHECK(last["all_passed"] == true);
    CHECK(last["total"]["total"] == 3);
}

TEST_CASE("verify: csv table") {
    const RunResult r = run_cli("verify KNOWN_EVAL --label 0..7 --format csv");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 9);
    CHECK(lines[0].rfind("identity,params,kind,weight", 0) == 0);
}

TEST_CASE("verify: thread count never changes the output bytes") {
    const std::string args = "verify SYM_R --format json --prec 25 --max-weight 8";
    const RunResult a = run_cli(args + " --threads 1");
    const RunResult b = run_cli(args + " --threads 3");
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("precision: environment default and flag override") {
    const RunResult env_only =
        run_cli("verify TS1Q --q 3 --format json", "EULERSUM_PREC=30");
    CHECK(env_only.code == 0);
    CHECK(ordered_json::parse(lines_of(env_only.out)[0])["tolerance"] == "1e-20");
    const RunResult flag_wins =
        run_cli("verify TS1Q --q 3 --format json --prec 50", "EULERSUM_PREC=30");
    CHECK(flag_wins.code == 0);
    CHECK(ordered_json::parse(lines_of(flag_wins.out)[0])["tolerance"] == "1e-40");
}

TEST_CASE("verify: --out writes the report to a file") {
    const std::string path = "cli_out_check.txt";
    std::remove(path.c_str());
    const RunResult r = run_cli("verify TS1Q --q 2 --out " + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("summary: passed 1/1") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("paper-examples: replays the full table") {
    const RunResult r = run_cli("paper-examples --prec 20 --threads 2 --format json");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 46);  // 45 rows + summary
    long oracle_rows = 0;
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        const ordered_json j = ordered_json::parse(lines[i]);
        CHECK(j["passed"] == true);
        if (j["tolerance"] == "1e-12") ++oracle_rows;
    }
    CHECK(oracle_rows == 8);
    CHECK(ordered_json::parse(lines.back())["all_passed"] == true);
}
