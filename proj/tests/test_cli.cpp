// End-to-end checks of the command-line tool: spawns the built binary and
// inspects exit codes and output bytes.

#include "grasscf/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef GRASSCF_CLI_PATH
#error "GRASSCF_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunOutput {
    int exit_code = -1;
    std::string stdout_text;
};

void make_dir(const std::string& dir) {
    if (std::system(("mkdir -p " + dir).c_str()) != 0)
        throw std::runtime_error("mkdir failed");
}

RunOutput run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string dir = std::string("/tmp/grasscf_cli_") + std::to_string(::getpid());
    make_dir(dir);
    std::string out_path = dir + "/out.txt";
    std::string in_path = dir + "/in.txt";
    std::string command = std::string(GRASSCF_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    if (!stdin_text.empty()) {
        std::ofstream in(in_path);
        in << stdin_text;
        in.close();
        command += " < " + in_path;
    }
    int status = std::system(command.c_str());
    RunOutput result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream out(out_path);
    std::ostringstream buffer;
    buffer << out.rdbuf();
    result.stdout_text = buffer.str();
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string dir = std::string("/tmp/grasscf_cli_") + std::to_string(::getpid());
    make_dir(dir);
    std::string path = dir + "/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kWorkedVector = "2 4 : 10 10 12 -15 3 21\n";

} // namespace

TEST_CASE("plucker subcommand") {
    SUBCASE("3x6 block example ends with -1") {
        std::string file = write_temp("block.txt",
                                      "1 0 0 1 1 1\n0 1 0 -3 -2 -1\n0 0 1 8 5 1\n");
        RunOutput r = run_cli("plucker " + file + " --format text");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text ==
              "3 6 : 1 8 5 1 3 2 1 1 5 3 1 1 1 3 7 4 1 2 1 -1\n");
    }
    SUBCASE("identity block") {
        std::string file = write_temp("ident.txt", "1 0 0\n0 1 0\n");
        RunOutput r = run_cli("plucker " + file + " --format text");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text == "2 3 : 1 0 0\n");
    }
    SUBCASE("malformed row length fails with exit 2") {
        std::string file = write_temp("bad.txt", "1 2 3\n4 5\n");
        RunOutput r = run_cli("plucker " + file);
        CHECK(r.exit_code == 2);
    }
    SUBCASE("rank-deficient matrix fails with exit 2") {
        std::string file = write_temp("rank.txt", "1 2 3\n2 4 6\n");
        RunOutput r = run_cli("plucker " + file);
        CHECK(r.exit_code == 2);
    }
    SUBCASE("reads stdin via -") {
        RunOutput r = run_cli("plucker - --format text", "1 0\n0 1\n");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text == "2 2 : 1\n");
    }
}

TEST_CASE("run subcommand") {
    std::string vec = write_temp("worked.txt", kWorkedVector);
    SUBCASE("mee on the worked example") {
        RunOutput r = run_cli("run --algo mee " + vec);
        REQUIRE(r.exit_code == 0);
        grasscf::Json doc = grasscf::Json::parse(r.stdout_text);
        CHECK(doc["result"]["index"].get<std::string>() == "1");
        grasscf::Trace trace = grasscf::trace_from_json(doc["trace"]);
        CHECK(trace.complete());
        grasscf::IntMatrix m = grasscf::matrix_from_json(doc["result"]["matrix"]);
        CHECK(grasscf::compute_plucker(m) ==
              grasscf::plucker_from_text(kWorkedVector));
    }
    SUBCASE("minee on a single-coordinate input gives an empty trace") {
        std::string file = write_temp("gkk.txt", "3 3 : -9\n");
        RunOutput r = run_cli("run --algo minee " + file);
        REQUIRE(r.exit_code == 0);
        grasscf::Json doc = grasscf::Json::parse(r.stdout_text);
        CHECK(doc["trace"]["steps"].empty());
        CHECK(doc["trace"]["p_hat"].get<std::string>() == "-9");
    }
    SUBCASE("non-decomposable input exits 3") {
        std::string file = write_temp("bad_vec.txt", "2 4 : 1 0 0 0 0 1\n");
        RunOutput r = run_cli("run --algo mee " + file);
        CHECK(r.exit_code == 3);
    }
    SUBCASE("mee rejects k != 2 with exit 2") {
        std::string file = write_temp("k3.txt", "3 4 : 1 2 3 4\n");
        RunOutput r = run_cli("run --algo mee " + file);
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("random subcommand") {
    SUBCASE("same seed twice is byte-identical") {
        RunOutput a = run_cli("random --k 2 --n 5 --bound 20 --seed 7");
        RunOutput b = run_cli("random --k 2 --n 5 --bound 20 --seed 7");
        CHECK(a.exit_code == 0);
        CHECK(a.stdout_text == b.stdout_text);
        RunOutput c = run_cli("random --k 2 --n 5 --bound 20 --seed 8");
        CHECK(c.stdout_text != a.stdout_text);
    }
    SUBCASE("produces a decomposable vector consistent with its matrix") {
        RunOutput r = run_cli("random --k 2 --n 5 --bound 20 --seed 11");
        REQUIRE(r.exit_code == 0);
        grasscf::Json doc = grasscf::Json::parse(r.stdout_text);
        grasscf::IntMatrix m = grasscf::matrix_from_json(doc["matrix"]);
        grasscf::PluckerVector p = grasscf::plucker_from_json(doc["plucker"]);
        CHECK(grasscf::compute_plucker(m) == p);
        CHECK(grasscf::check_relations(p));
    }
    SUBCASE("bound 0 exits 2") {
        RunOutput r = run_cli("random --k 2 --n 5 --bound 0 --seed 1");
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("verify subcommand") {
    std::string vec = write_temp("verify_vec.txt", kWorkedVector);
    RunOutput run = run_cli("run --algo mee " + vec);
    REQUIRE(run.exit_code == 0);

    SUBCASE("accepts its own run output") {
        std::string trace = write_temp("trace.json", run.stdout_text);
        RunOutput r = run_cli("verify " + trace + " " + vec);
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text.find("FAIL") == std::string::npos);
        CHECK(r.stdout_text.find("ok   reconstruction") != std::string::npos);
    }
    SUBCASE("corrupted matrix entry is caught with exit 1") {
        grasscf::Json doc = grasscf::Json::parse(run.stdout_text);
        auto& cell = doc["trace"]["steps"][0]["matrix"][0][0];
        cell = std::to_string(std::stol(cell.get<std::string>()) + 1);
        std::string trace = write_temp("trace_bad.json", doc.dump());
        RunOutput r = run_cli("verify " + trace + " " + vec);
        CHECK(r.exit_code == 1);
        CHECK(r.stdout_text.find("FAIL") != std::string::npos);
    }
    SUBCASE("p_hat off by one fails the gcd check") {
        grasscf::Json doc = grasscf::Json::parse(run.stdout_text);
        long value = std::stol(doc["trace"]["p_hat"].get<std::string>());
        doc["trace"]["p_hat"] = std::to_string(value + 1);
        std::string trace = write_temp("trace_phat.json", doc.dump());
        RunOutput r = run_cli("verify " + trace + " " + vec);
        CHECK(r.exit_code == 1);
        CHECK(r.stdout_text.find("FAIL terminal_gcd") != std::string::npos);
    }
    SUBCASE("mismatched files exit 2") {
        std::string trace = write_temp("trace_ok.json", run.stdout_text);
        std::string other = write_temp("other_vec.txt", "2 5 : 1 2 3 4 5 6 7 8 9 10\n");
        RunOutput r = run_cli("verify " + trace + " " + other);
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("positivize subcommand") {
    std::string vec = write_temp("pos_vec.txt", kWorkedVector);
    RunOutput r = run_cli("positivize " + vec + " --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.find("2 4 : 10 10 12 15 21 3") != std::string::npos);
    std::string zero = write_temp("pos_zero.txt", "2 4 : 1 0 2 3 4 5\n");
    CHECK(run_cli("positivize " + zero).exit_code == 2);
}

TEST_CASE("cli run output is deterministic") {
    std::string vec = write_temp("det_vec.txt", kWorkedVector);
    RunOutput a = run_cli("run --algo minee " + vec);
    RunOutput b = run_cli("run --algo minee " + vec);
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
}
