#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "gps/census.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs `prefix gps args` through the shell, capturing exit code and streams.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const std::string tag = std::to_string(++counter);
    const fs::path out = dir / ("gps_cli_out_" + tag + ".txt");
    const fs::path err = dir / ("gps_cli_err_" + tag + ".txt");
    std::string cmd = env_prefix + "'" + std::string(GPS_CLI_PATH) + "' " + args + " > '" +
                      out.string() + "' 2> '" + err.string() + "'";
    int status = std::system(cmd.c_str());
    RunResult res;
#ifndef _WIN32
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
    res.exit_code = status;
#endif
    res.out = slurp(out);
    res.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return res;
}

std::string fixture(const std::string& name) {
    return "'" + std::string(GPS_FIXTURES_DIR) + "/" + name + "'";
}

fs::path write_temp(const std::string& stem, const std::string& content) {
    fs::path p = fs::temp_directory_path() / stem;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

}  // namespace

TEST_CASE("analyze: human-readable output on the worked example") {
    RunResult r = run_cli("analyze --gamma " + fixture("gamma1.edges") + " --sigma " +
                          fixture("sigma.edges") + " --format edgelist");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("|Aut(gamma)|   = 12") != std::string::npos);
    CHECK(r.out.find("|Aut(sigma)|   = 1") != std::string::npos);
    CHECK(r.out.find("|Aut(product)| = 12") != std::string::npos);
    CHECK(r.out.find("classification: stable") != std::string::npos);
    CHECK(r.out.find("theorem1: pass") != std::string::npos);
}

TEST_CASE("analyze: JSON output parses back into a report document") {
    RunResult r = run_cli("analyze --gamma " + fixture("gamma2.edges") + " --sigma " +
                          fixture("sigma.edges") + " --format edgelist --json");
    REQUIRE(r.exit_code == 0);
    gps::ReportDocument doc = gps::ReportDocument::from_json(r.out);
    CHECK(doc.gamma.order == 8);
    CHECK(doc.gamma.format == "edgelist");
    CHECK(doc.aut_gamma_order == 2);
    CHECK(doc.aut_sigma_order == 1);
    CHECK(doc.aut_product_order == 4);
    CHECK(doc.classification == "trivially-unstable");
}

TEST_CASE("analyze: graph6 input") {
    fs::path k4 = write_temp("gps_cli_k4.g6", "C~\n");
    fs::path c5 = write_temp("gps_cli_c5.g6", "Dhc\n");
    RunResult r = run_cli("analyze --gamma '" + k4.string() + "' --sigma '" + c5.string() +
                          "' --format graph6 --json");
    REQUIRE(r.exit_code == 0);
    gps::ReportDocument doc = gps::ReportDocument::from_json(r.out);
    CHECK(doc.classification == "stable");
    CHECK(doc.aut_product_order == 240);
    fs::remove(k4);
    fs::remove(c5);
}

TEST_CASE("analyze: input errors exit 1") {
    RunResult missing = run_cli("analyze --gamma /nonexistent.edges --sigma " +
                                fixture("sigma.edges") + " --format edgelist");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("cannot read") != std::string::npos);

    fs::path bad = write_temp("gps_cli_bad.g6", "A \n");
    RunResult malformed = run_cli("analyze --gamma '" + bad.string() + "' --sigma '" +
                                  bad.string() + "' --format graph6");
    CHECK(malformed.exit_code == 1);
    fs::remove(bad);

    RunResult bad_flag = run_cli("analyze --gamma x --sigma y --format csv");
    CHECK(bad_flag.exit_code == 1);
}

TEST_CASE("analyze: cap handling and precedence") {
    const std::string args = "analyze --gamma " + fixture("gamma1.edges") + " --sigma " +
                             fixture("sigma.edges") + " --format edgelist";
    RunResult capped = run_cli(args, "GPS_MAX_AUT=2 ");
    CHECK(capped.exit_code == 2);
    CHECK_FALSE(capped.err.empty());

    // --max-aut outranks the environment.
    RunResult lifted = run_cli(args + " --max-aut 20000", "GPS_MAX_AUT=2 ");
    CHECK(lifted.exit_code == 0);

    RunResult junk_env = run_cli(args, "GPS_MAX_AUT=banana ");
    CHECK(junk_env.exit_code == 1);
    CHECK(junk_env.err.find("GPS_MAX_AUT") != std::string::npos);
}

TEST_CASE("census: JSONL output is byte-identical across job counts") {
    fs::path a = fs::temp_directory_path() / "gps_cli_census_a.jsonl";
    fs::path b = fs::temp_directory_path() / "gps_cli_census_b.jsonl";
    RunResult serial = run_cli("census --max-gamma 3 --sigma-set k2 --jobs 1 --out '" +
                               a.string() + "'");
    RunResult parallel = run_cli("census --max-gamma 3 --sigma-set k2 --jobs 4 --out '" +
                                 b.string() + "'");
    CHECK(serial.exit_code == 0);
    CHECK(parallel.exit_code == 0);
    const std::string text_a = slurp(a), text_b = slurp(b);
    CHECK_FALSE(text_a.empty());
    CHECK(text_a == text_b);
    // 7 gamma classes of order <= 3, one record line each, plus the summary.
    CHECK(std::count(text_a.begin(), text_a.end(), '\n') == 8);
    fs::remove(a);
    fs::remove(b);

    RunResult stdout_mode = run_cli("census --max-gamma 2 --sigma-set k2");
    CHECK(stdout_mode.exit_code == 0);
    CHECK(stdout_mode.out.find("{\"summary\":") != std::string::npos);
}

TEST_CASE("census: input errors exit 1") {
    CHECK(run_cli("census --max-gamma 9 --sigma-set k2").exit_code == 1);
    CHECK(run_cli("census --max-gamma 3 --sigma-set nosuch").exit_code == 1);
    CHECK(run_cli("census --max-gamma 3 --sigma-set k2 --out /nonexistent_dir/x.jsonl")
              .exit_code == 1);
}

TEST_CASE("verify: builtin suite") {
    RunResult vs2 = run_cli("verify --lemma vs2 --builtin-suite");
    CHECK(vs2.exit_code == 0);
    CHECK(vs2.out.find("(K4,C5) vs2: pass") != std::string::npos);
    CHECK(vs2.out.find("(C4,C3) vs2: hypotheses-not-met") != std::string::npos);
    CHECK(vs2.out.find("identities: pass") != std::string::npos);
    CHECK(vs2.out.find(": fail") == std::string::npos);

    RunResult all = run_cli("verify --lemma all --builtin-suite");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find(": fail") == std::string::npos);
    CHECK(all.out.find("(C5,K4) hom: pass") != std::string::npos);
}

TEST_CASE("verify: explicit pair and error paths") {
    fs::path k4 = write_temp("gps_cli_vk4.g6", "C~");
    fs::path c5 = write_temp("gps_cli_vc5.g6", "Dhc");
    RunResult file_pair = run_cli("verify --lemma X --gamma '" + k4.string() +
                                  "' --sigma '" + c5.string() + "' --format graph6");
    CHECK(file_pair.exit_code == 0);
    CHECK(file_pair.out.find("X: pass") != std::string::npos);
    fs::remove(k4);
    fs::remove(c5);

    RunResult unknown = run_cli("verify --lemma nosuch --builtin-suite");
    CHECK(unknown.exit_code == 1);
    CHECK(unknown.err.find("unknown lemma") != std::string::npos);

    RunResult no_inputs = run_cli("verify --lemma X");
    CHECK(no_inputs.exit_code == 1);
}
