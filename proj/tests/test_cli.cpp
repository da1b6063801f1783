#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

#ifndef ZARANK_CLI_PATH
#define ZARANK_CLI_PATH "./zarank"
#endif

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ZARANK_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("improvement table preset is byte-stable") {
    RunResult r = run_cli("table --preset dhs-improvements --no-header");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "m\tn\tk\tfloor\n"
          "14\t29\t3\t87\n"
          "14\t30\t3\t89\n"
          "17\t24\t4\t92\n"
          "17\t25\t4\t94\n"
          "18\t24\t4\t97\n"
          "18\t25\t4\t99\n"
          "20\t31\t4\t124\n"
          "21\t31\t4\t129\n"
          "22\t25\t5\t119\n"
          "23\t25\t5\t124\n");
    // deterministic across runs
    CHECK(run_cli("table --preset dhs-improvements --no-header").out == r.out);
}

TEST_CASE("bounds TSV and JSON carry identical numeric content") {
    RunResult tsv = run_cli("bounds --lambda 1 --m 99 --n 235 --no-header");
    CHECK(tsv.code == 0);
    CHECK(tsv.out.find("37461/23") != std::string::npos);
    CHECK(tsv.out.find("1628") != std::string::npos);
    CHECK(tsv.out.find("B\t7") != std::string::npos);

    RunResult js = run_cli("bounds --lambda 1 --m 99 --n 235 --format json");
    CHECK(js.code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["result"]["value"] == "37461/23");
    CHECK(j["result"]["floor"] == "1628");
    CHECK(j["result"]["family"] == "B");
    CHECK(j["result"]["k"] == 7);
    CHECK(j["result"]["profile"]["n_km1"] == "686/23");
}

TEST_CASE("forced-family bound query") {
    RunResult r = run_cli("bounds --lambda 1 --m 99 --n 235 --k 6 --family A --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["value"] == "1631");
    CHECK(j["result"]["regime"] == "forced");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("bounds --lambda 1 --m 10 --n 5 --k 3").code == 2);  // --k without --family
    CHECK(run_cli("bounds --m 10 --n 5").code == 2);                   // missing --lambda
    CHECK(run_cli("nonsense").code == 2);
}

TEST_CASE("construct, file, verify round trip") {
    std::string path = "cli_roundtrip_witness.json";
    RunResult c = run_cli("construct --k 3 --lambda 1 --m 9 --n 12 --family A --out " + path);
    CHECK(c.code == 0);
    RunResult v = run_cli("verify --in " + path + " --k 3 --lambda 1 --n 12 --format json");
    CHECK(v.code == 0);
    auto j = nlohmann::json::parse(v.out);
    CHECK(j["result"]["verified"] == true);
    CHECK(j["result"]["total_degree"] == 36);

    // tamper: duplicate an edge; verification must fail with exit 1
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto w = nlohmann::json::parse(text);
    w["edges"].push_back(w["edges"][0]);
    {
        std::ofstream outf(path, std::ios::binary);
        outf << w.dump() << "\n";
    }
    RunResult bad = run_cli("verify --in " + path + " --k 3 --lambda 1 --n 13");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("linear") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("oracle and scan subcommands") {
    RunResult o = run_cli("oracle --lambda 1 --m 7 --n 6 --format json");
    CHECK(o.code == 0);
    auto j = nlohmann::json::parse(o.out);
    CHECK(j["result"]["value"] == 18);
    CHECK(j["result"]["exact"] == true);

    RunResult s = run_cli("scan --lambda 1 --m 5 --n-from 6 --n-to 10 --no-header");
    CHECK(s.code == 0);
    CHECK(s.out ==
          "n\tvalue\texact\n"
          "6\t14\ttrue\n"
          "7\t15\ttrue\n"
          "8\t17\ttrue\n"
          "9\t18\ttrue\n"
          "10\t20\ttrue\n");
}

TEST_CASE("predicates and design subcommands") {
    RunResult p = run_cli("predicates --k 3 --lambda 1 --m 19 --n 32 --format json");
    CHECK(p.code == 0);
    auto j = nlohmann::json::parse(p.out);
    CHECK(j["result"]["status"] == "equivalent-to-design");
    CHECK(j["result"]["design_h"] == "7");

    RunResult d = run_cli("design --k 7 --lambda 1 --format json");
    CHECK(d.code == 0);
    auto jd = nlohmann::json::parse(d.out);
    CHECK(jd["result"]["status"] == "nonexistent");
    CHECK(jd["result"]["h"] == 43);
}

TEST_CASE("malformed witness files report position") {
    std::string path = "cli_bad_witness.json";
    {
        std::ofstream f(path, std::ios::binary);
        f << "{\"m\": 3,\n \"lambda\": 1,\n \"edges\": [[0,1],]}\n";
    }
    std::string cmd = std::string(ZARANK_CLI_PATH) + " verify --in " + path +
                      " --k 2 --lambda 1 --n 1 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    CHECK(WEXITSTATUS(status) == 1);
    CHECK(out.find("line 3") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("header suppression") {
    RunResult with = run_cli("bounds --lambda 1 --m 5 --n 4");
    RunResult without = run_cli("bounds --lambda 1 --m 5 --n 4 --no-header");
    CHECK(with.out.find("# zarank") != std::string::npos);
    CHECK(without.out.find('#') == std::string::npos);
}

TEST_CASE("table JSON matches the TSV rows") {
    RunResult js = run_cli("table --preset dhs-improvements --format json");
    CHECK(js.code == 0);
    auto j = nlohmann::json::parse(js.out);
    REQUIRE(j["result"].size() == 10);
    CHECK(j["result"][0]["m"] == 14);
    CHECK(j["result"][0]["floor"] == "87");
    CHECK(j["result"][9]["m"] == 23);
    CHECK(j["result"][9]["floor"] == "124");
}

TEST_CASE("starved oracle run exits with the budget code") {
    RunResult r = run_cli("oracle --lambda 1 --m 8 --n 12 --budget 10");
    CHECK(r.code == 3);
}
