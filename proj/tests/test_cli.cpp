#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "json.hpp"
#include "test_support.hpp"

namespace {

std::string fixture_path() { return fdtest::data_file("enviopostal.csv"); }

std::string cli(const std::string& args) {
    return "'" + fdtest::cli_path() + "' " + args;
}

std::vector<std::vector<std::string>> parse_table(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    bool in_table = false;
    while (std::getline(lines, line)) {
        if (line.rfind("ATTRIBUTES", 0) == 0) {
            in_table = true;
            continue;
        }
        if (!in_table) continue;
        if (line.empty()) break;
        std::istringstream cells(line);
        std::vector<std::string> row;
        std::string cell;
        while (cells >> cell) row.push_back(cell);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

TEST_CASE("matrix text output reproduces the reference table") {
    const auto result = fdtest::run_command(cli("matrix " + fixture_path()));
    REQUIRE(result.exit_code == 0);
    const auto table = parse_table(result.out);
    const std::vector<std::vector<std::string>> expected = {
        {"CLAVE", "1", "0", "0", "0"},
        {"COLOR", "1", "1", "1", "1"},
        {"VOLUMEN", "1", "0", "1", "1"},
        {"PESO", "1", "0", "0", "1"},
    };
    CHECK(table == expected);
}

TEST_CASE("matrix json output") {
    const auto result = fdtest::run_command(cli("matrix " + fixture_path() + " -o json"));
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    const std::vector<std::vector<int>> expected = {
        {1, 0, 0, 0}, {1, 1, 1, 1}, {1, 0, 1, 1}, {1, 0, 0, 1}};
    CHECK(doc["results"]["matrix"].get<std::vector<std::vector<int>>>() == expected);
    CHECK(doc["input"]["attributes"] ==
          nlohmann::json({"CLAVE", "COLOR", "VOLUMEN", "PESO"}));
}

TEST_CASE("one-column file yields the 1x1 matrix") {
    const auto path = fdtest::write_temp_csv("cli_onecol", "X\na\nb\n");
    const auto result = fdtest::run_command(cli("matrix " + path + " -o json"));
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["results"]["matrix"] == nlohmann::json({{1}}));
    std::remove(path.c_str());
}

TEST_CASE("discover finds the six single-attribute dependencies") {
    const auto result =
        fdtest::run_command(cli("discover " + fixture_path() + " --max-lhs 1 -o json"));
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    REQUIRE(doc["results"]["fds"].size() == 6);
    CHECK(doc["results"]["fds"][0] ==
          nlohmann::json({{"lhs", {"CLAVE"}}, {"rhs", "COLOR"}}));
}

TEST_CASE("discover with verification exits cleanly") {
    const auto result =
        fdtest::run_command(cli("discover " + fixture_path() + " --max-lhs 2 --verify"));
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("verification: ok") != std::string::npos);
}

TEST_CASE("duplicate rows yield the no-candidate-keys notice") {
    const auto path = fdtest::write_temp_csv("cli_dup", "A,B\nx,y\nx,y\n");
    const auto result = fdtest::run_command(cli("discover " + path + " --keys"));
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("no candidate keys") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("keys subcommand reports CLAVE") {
    const auto result =
        fdtest::run_command(cli("keys " + fixture_path() + " --max-lhs 4 -o json"));
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["results"]["keys"] == nlohmann::json({{"CLAVE"}}));
}

TEST_CASE("check HOLDS") {
    const auto result =
        fdtest::run_command(cli("check " + fixture_path() + " 'VOLUMEN->COLOR'"));
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("VOLUMEN -> COLOR: HOLDS") != std::string::npos);
}

TEST_CASE("check FAILS with witness rows 4 and 7") {
    const auto result =
        fdtest::run_command(cli("check " + fixture_path() + " 'VOLUMEN->PESO'"));
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("VOLUMEN -> PESO: FAILS") != std::string::npos);
    CHECK(result.out.find("witness: rows 4 and 7") != std::string::npos);
    CHECK(result.out.find("PESO=420") != std::string::npos);
    CHECK(result.out.find("PESO=360") != std::string::npos);
}

TEST_CASE("trivial dependency is a usage error") {
    const auto result =
        fdtest::run_command(cli("check " + fixture_path() + " 'COLOR->COLOR'"));
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("trivial") != std::string::npos);
}

TEST_CASE("malformed expression is a usage error") {
    CHECK(fdtest::run_command(cli("check " + fixture_path() + " 'COLOR'")).exit_code == 2);
    CHECK(fdtest::run_command(cli("check " + fixture_path() + " 'NOPE->COLOR'")).exit_code ==
          2);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(fdtest::run_command(cli("matrix /does/not/exist.csv")).exit_code == 2);

    const auto ragged = fdtest::write_temp_csv("cli_ragged", "A,B,C,D\n1,2,3\n");
    const auto result = fdtest::run_command(cli("matrix " + ragged));
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("line 2") != std::string::npos);
    std::remove(ragged.c_str());
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(fdtest::run_command(cli("")).exit_code == 2);
    CHECK(fdtest::run_command(cli("discover")).exit_code == 2);
    CHECK(fdtest::run_command(cli("matrix " + fixture_path() + " -o yaml")).exit_code == 2);
    CHECK(fdtest::run_command(cli("matrix " + fixture_path() + " -d toolong")).exit_code ==
          2);
}

TEST_CASE("headerless and custom-delimiter ingestion through the CLI") {
    const auto path = fdtest::write_temp_csv("cli_nohdr", "1;x\n2;x\n3;y\n");
    const auto result =
        fdtest::run_command(cli("keys " + path + " --no-header -d ';' -o json"));
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["input"]["attributes"] == nlohmann::json({"A1", "A2"}));
    CHECK(doc["results"]["keys"] == nlohmann::json({{"A1"}}));
    std::remove(path.c_str());
}

TEST_CASE("json output is byte-identical across runs") {
    const std::string cmd = cli("discover " + fixture_path() + " --max-lhs 3 -o json");
    const auto first = fdtest::run_command(cmd);
    const auto second = fdtest::run_command(cmd);
    REQUIRE(first.exit_code == 0);
    REQUIRE(second.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
}

TEST_CASE("timing goes to stderr, not stdout") {
    const auto result = fdtest::run_command(cli("matrix " + fixture_path()));
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find(" ms") == std::string::npos);
    CHECK(result.err.find("completed in") != std::string::npos);
}

TEST_CASE("thread count does not change the output") {
    const auto serial =
        fdtest::run_command(cli("discover " + fixture_path() + " --threads 1 -o json"));
    const auto threaded =
        fdtest::run_command(cli("discover " + fixture_path() + " --threads 8 -o json"));
    REQUIRE(serial.exit_code == 0);
    REQUIRE(threaded.exit_code == 0);
    CHECK(serial.out == threaded.out);
}

TEST_CASE("case folding changes what counts as a key") {
    const auto path = fdtest::write_temp_csv("cli_fold", "A,B\nX,1\nx,2\n");
    const auto strict = fdtest::run_command(cli("keys " + path + " -o json"));
    REQUIRE(strict.exit_code == 0);
    CHECK(nlohmann::json::parse(strict.out)["results"]["keys"][0] ==
          nlohmann::json({"A"}));

    const auto folded = fdtest::run_command(cli("keys " + path + " --fold-case -o json"));
    REQUIRE(folded.exit_code == 0);
    CHECK(nlohmann::json::parse(folded.out)["results"]["keys"][0] ==
          nlohmann::json({"B"}));
    std::remove(path.c_str());
}

TEST_CASE("max-lhs 0 requests the unbounded search") {
    // The pair (A,B) is a key only found at size 2; default max-lhs would
    // already see it, so push the composite to size 3.
    const auto path = fdtest::write_temp_csv(
        "cli_unbounded",
        "A,B,C,D\n1,1,1,x\n1,1,2,x\n1,2,1,x\n2,1,1,x\n1,2,2,x\n2,1,2,x\n2,2,1,x\n2,2,2,x\n");
    const auto result =
        fdtest::run_command(cli("keys " + path + " --max-lhs 0 -o json"));
    REQUIRE(result.exit_code == 0);
    CHECK(nlohmann::json::parse(result.out)["results"]["keys"][0] ==
          nlohmann::json({"A", "B", "C"}));
    std::remove(path.c_str());
}
