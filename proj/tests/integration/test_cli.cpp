// End-to-end checks of the command-line tool: parses real process output,
// verifies exit codes, and diffs byte-identical reruns across worker counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, bool keep_stderr = false) {
    const std::string cmd =
        std::string(TWISTROOT_CLI_PATH) + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json parse(const RunResult& r) {
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("enumerate: genus 2 degree 5") {
    auto r = run("enumerate --genus 2 --degree 5 --no-elapsed");
    REQUIRE(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["command"] == "enumerate");
    CHECK(j["version"] == "0.1.0");
    CHECK(!j.contains("elapsed_ms"));
    CHECK(j["parameters"]["genus"] == 2);
    CHECK(j["results"]["count"] == 2);
    REQUIRE(j["results"]["classes"].size() == 2);
    CHECK(j["results"]["classes"][0]["sigma_boundary"] == json::array({1, 2}));
    CHECK(j["results"]["classes"][1]["sigma_boundary"] == json::array({3, 3}));

    auto both = parse(run("enumerate --genus 2 --degree 5 --boundary-convention both --no-elapsed"));
    CHECK(both["results"]["conventions"]["unordered"]["count"] == 2);
    CHECK(both["results"]["conventions"]["ordered"]["count"] == 3);
}

TEST_CASE("enumerate: envelope carries elapsed time by default") {
    auto j = parse(run("enumerate --genus 2 --degree 5"));
    REQUIRE(j.contains("elapsed_ms"));
    CHECK(j["elapsed_ms"].is_number_integer());
}

TEST_CASE("enumerate: usage errors exit 2") {
    CHECK(run("enumerate --genus 0 --degree 3").exit_code == 2);
    CHECK(run("enumerate --genus 2 --degree 1").exit_code == 2);
    CHECK(run("enumerate --degree 3").exit_code == 2);
    CHECK(run("enumerate --genus 2 --degree 5 --boundary-convention sideways").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("").exit_code == 2);
}

TEST_CASE("spectrum: genus 3") {
    auto r = run("spectrum --genus 3 --no-elapsed");
    REQUIRE(r.exit_code == 0);
    auto j = parse(r);
    REQUIRE(j["results"]["spectrum"].size() == 2);
    CHECK(j["results"]["spectrum"][0]["n"] == 3);
    CHECK(j["results"]["spectrum"][0]["count"] == 1);
    CHECK(j["results"]["spectrum"][1]["n"] == 7);
    CHECK(j["results"]["spectrum"][1]["count"] == 3);
    CHECK(j["results"]["boundary_convention"] == "unordered");
}

TEST_CASE("spectrum: table format is human-oriented") {
    auto r = run("spectrum --genus 3 --format table");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("degree spectrum") != std::string::npos);
    CHECK(r.out.find("n = 7: 3 class(es)") != std::string::npos);
}

TEST_CASE("results are byte-identical across worker counts") {
    // the parameters echo necessarily records the differing --parallel value,
    // so the determinism contract lives on the results object
    for (const std::string& base :
         {std::string("enumerate --genus 6 --degree 13 --boundary-convention both --no-elapsed"),
          std::string("spectrum --genus 8 --no-elapsed"),
          std::string("exists --genus 6 --degree 5 --no-elapsed"),
          std::string("sp-sqrt --genus 1 --bound 2 --no-elapsed")}) {
        auto one = run(base + " --parallel 1");
        auto two = run(base + " --parallel 2");
        auto eight = run(base + " --parallel 8");
        REQUIRE(one.exit_code == 0);
        CHECK(two.exit_code == 0);
        CHECK(eight.exit_code == 0);
        const std::string r1 = parse(one)["results"].dump();
        CHECK(r1 == parse(two)["results"].dump());
        CHECK(r1 == parse(eight)["results"].dump());
    }
    // and identical invocations are byte-identical end to end
    const std::string same = "spectrum --genus 8 --parallel 2 --no-elapsed";
    CHECK(run(same).out == run(same).out);
}

TEST_CASE("exists") {
    auto yes = parse(run("exists --genus 2 --degree 5 --no-elapsed"));
    CHECK(yes["results"]["exists"] == true);
    auto no = parse(run("exists --genus 2 --degree 7 --no-elapsed"));
    CHECK(no["results"]["exists"] == false);
    CHECK(run("exists --genus 2 --degree 7").exit_code == 0);  // a clean answer, not a failure
}

TEST_CASE("verify-degree3: shipped tables pass") {
    for (int g = 2; g <= 5; ++g) {
        auto r = run("verify-degree3 --genus " + std::to_string(g) + " --no-elapsed");
        REQUIRE(r.exit_code == 0);
        auto j = parse(r);
        CHECK(j["results"]["verified"] == true);
        CHECK(j["results"]["hhat_cubed_matches"] == true);
        CHECK(j["results"]["relations_passed"] == j["results"]["relations_total"]);
    }
}

TEST_CASE("verify-degree3: corrupted table exits 1") {
    // load the shipped genus-3 table, zero out one chain curve, retry
    auto good = parse(run("verify-degree3 --genus 2 --no-elapsed"));
    REQUIRE(good["results"]["verified"] == true);

    std::ifstream in(std::string(TWISTROOT_SOURCE_DATA_DIR) + "/curves_genus3.json");
    REQUIRE(in.good());
    json table = json::parse(in);
    for (auto& rec : table["curves"])
        if (rec["name"] == "beta2")
            for (auto& v : rec["class"]) v = 0;
    const std::string tmp = "/tmp/twistroot_corrupt_table.json";
    {
        std::ofstream out(tmp);
        out << table.dump();
    }
    auto r = run("verify-degree3 --genus 2 --table " + tmp + " --no-elapsed");
    CHECK(r.exit_code == 1);
    auto j = parse(r);
    CHECK(j["results"]["verified"] == false);
    std::remove(tmp.c_str());
}

TEST_CASE("verify-degree3: usage and file errors exit 2") {
    CHECK(run("verify-degree3 --genus 1").exit_code == 2);
    CHECK(run("verify-degree3 --genus 2 --table /nonexistent.json").exit_code == 2);
    // genus without a shipped table and no override
    CHECK(run("verify-degree3 --genus 9").exit_code == 2);
}

TEST_CASE("verify-degree3: data dir from the environment") {
    const std::string cmd = std::string("TWISTROOT_DATA_DIR=/nonexistent ") + TWISTROOT_CLI_PATH +
                            " verify-degree3 --genus 2 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> buf;
    while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
    }
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 2);

    // pointing the environment at the real data dir works
    const std::string good = std::string("TWISTROOT_DATA_DIR=") + TWISTROOT_SOURCE_DATA_DIR + " " +
                             TWISTROOT_CLI_PATH + " verify-degree3 --genus 2 2>/dev/null";
    FILE* pipe2 = popen(good.c_str(), "r");
    REQUIRE(pipe2 != nullptr);
    while (fread(buf.data(), 1, buf.size(), pipe2) > 0) {
    }
    CHECK(WEXITSTATUS(pclose(pipe2)) == 0);
}

TEST_CASE("sp-sqrt: the twist has no bounded root (exit 0)") {
    auto r = run("sp-sqrt --genus 1 --bound 3 --no-elapsed");
    REQUIRE(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["results"]["found"] == false);
    CHECK(j["results"]["root"].is_null());
    CHECK(j["results"]["dim"] == 4);
    auto& cons = j["results"]["constraints"];
    CHECK(std::find(cons.begin(), cons.end(), json("a12 = 0")) != cons.end());
    CHECK(std::find(cons.begin(), cons.end(), json("a11 = a33")) != cons.end());
}

TEST_CASE("sp-sqrt: a square input yields its root (exit 1)") {
    const std::string tmp = "/tmp/twistroot_s2_matrix.json";
    {
        std::ofstream out(tmp);
        out << "[[1,0,0,0],[0,1,0,0],[2,0,1,0],[0,0,0,1]]";
    }
    auto r = run("sp-sqrt --matrix-file " + tmp + " --bound 2 --no-elapsed");
    CHECK(r.exit_code == 1);
    auto j = parse(r);
    CHECK(j["results"]["found"] == true);
    CHECK(j["results"]["root"] ==
          json::array({json::array({1, 0, 0, 0}), json::array({0, 1, 0, 0}),
                       json::array({1, 0, 1, 0}), json::array({0, 0, 0, 1})}));
    std::remove(tmp.c_str());
}

TEST_CASE("sp-sqrt: bad matrices exit 2") {
    const std::string tmp = "/tmp/twistroot_bad_matrix.json";
    {
        std::ofstream out(tmp);
        out << "[[1,0],[0,1]]";  // dimension 2: no symplectic setup here
    }
    CHECK(run("sp-sqrt --matrix-file " + tmp).exit_code == 2);
    {
        std::ofstream out(tmp);
        out << "[[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]";  // not symplectic
    }
    CHECK(run("sp-sqrt --matrix-file " + tmp).exit_code == 2);
    std::remove(tmp.c_str());
    CHECK(run("sp-sqrt").exit_code == 2);  // neither --genus nor --matrix-file
    CHECK(run("sp-sqrt --genus 1 --matrix-file " + tmp).exit_code == 2);  // both
}

TEST_CASE("marked: documented examples") {
    auto a = parse(run("marked --genus 1 --punctures 2 --no-elapsed"));
    auto& av = a["results"]["verdicts"];
    CHECK(std::find(av.begin(), av.end(), json("NoRootsAtAll")) != av.end());
    auto b = parse(run("marked --genus 2 --fixed-boundary 1 --no-elapsed"));
    CHECK(b["results"]["verdicts"] == json::array({"NoRoots"}));
    auto c = parse(run("marked --genus 3 --no-elapsed"));
    CHECK(c["results"]["verdicts"] == json::array({"NoObstructionFound"}));
    CHECK(run("marked --genus 1 --punctures 2").exit_code == 0);
}

TEST_CASE("annulus-check") {
    auto r = run("annulus-check --degree 3 --no-elapsed");
    REQUIRE(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["results"]["delta0"] == 1);
    CHECK(j["results"]["delta1"] == 1);
    CHECK(j["results"]["twist_defect"] == 2);
    CHECK(j["results"]["power_identity_holds"] == true);
    CHECK(run("annulus-check --degree 7 --delta0 2 --delta1 4").exit_code == 0);
    CHECK(run("annulus-check --degree 4").exit_code == 2);   // even degree: no valid data
    CHECK(run("annulus-check --degree 9 --delta0 3").exit_code == 2);  // gcd(3,9) != 1
}

TEST_CASE("version flag") {
    auto r = run("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.1.0") != std::string::npos);
}
