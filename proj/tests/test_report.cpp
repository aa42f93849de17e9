#include <catch2/catch_amalgamated.hpp>

#include "fdscan/discovery.hpp"
#include "fdscan/report.hpp"
#include "json.hpp"
#include "test_support.hpp"

using fdscan::AttributeSet;
using fdscan::parse_fd_expression;
using fdscan::Relation;
using fdscan::RunReport;

namespace {

Relation fixture() { return fdscan::load_table(fdtest::data_file("enviopostal.csv")); }

}  // namespace

TEST_CASE("matrix report renders the fixture table") {
    const Relation rel = fixture();
    const RunReport report =
        fdscan::make_matrix_report(rel, "enviopostal.csv", fdscan::pairwise_matrix(rel));

    const std::string text = fdscan::render_text(report);
    CHECK(text.find("ATTRIBUTES  CLAVE  COLOR  VOLUMEN  PESO") != std::string::npos);
    CHECK(text.find("COLOR           1      1        1     1") != std::string::npos);
    CHECK(text.find("PESO            1      0        0     1") != std::string::npos);

    const auto doc = nlohmann::json::parse(fdscan::render_json(report));
    CHECK(doc["command"] == "matrix");
    CHECK(doc["input"]["rows"] == 8);
    CHECK(doc["input"]["attributes"][0] == "CLAVE");
    const std::vector<std::vector<int>> expected = {
        {1, 0, 0, 0}, {1, 1, 1, 1}, {1, 0, 1, 1}, {1, 0, 0, 1}};
    CHECK(doc["results"]["matrix"].get<std::vector<std::vector<int>>>() == expected);
}

TEST_CASE("discover report lists dependencies and keys") {
    const Relation rel = fixture();
    const auto fds = fdscan::minimal_fds(rel, 2);
    const auto keys = fdscan::candidate_keys(rel, 2);
    const RunReport report =
        fdscan::make_discover_report(rel, "enviopostal.csv", fds, keys, 2);

    const std::string text = fdscan::render_text(report);
    CHECK(text.find("CLAVE -> COLOR") != std::string::npos);
    CHECK(text.find("candidate keys: 1") != std::string::npos);

    const auto doc = nlohmann::json::parse(fdscan::render_json(report));
    CHECK(doc["results"]["fds"].size() == 6);
    CHECK(doc["results"]["fds"][0]["lhs"][0] == "CLAVE");
    CHECK(doc["results"]["fds"][0]["rhs"] == "COLOR");
    CHECK(doc["results"]["keys"][0][0] == "CLAVE");
    CHECK(doc["options"]["max_lhs"] == 2);
}

TEST_CASE("empty key report prints the notice") {
    const Relation rel =
        Relation::from_rows({"A", "B"}, {{"x", "y"}, {"x", "y"}});
    const RunReport report =
        fdscan::make_keys_report(rel, "dup.csv", fdscan::candidate_keys(rel, 2), 2);
    CHECK(fdscan::render_text(report).find("no candidate keys") != std::string::npos);
    const auto doc = nlohmann::json::parse(fdscan::render_json(report));
    CHECK(doc["results"]["keys"].empty());
}

TEST_CASE("check report decodes the witness rows") {
    const Relation rel = fixture();
    const auto fd = fdscan::holds(rel, AttributeSet{2}, 3);  // VOLUMEN -> PESO
    const RunReport report = fdscan::make_check_report(rel, "enviopostal.csv", fd);

    const std::string text = fdscan::render_text(report);
    CHECK(text.find("VOLUMEN -> PESO: FAILS") != std::string::npos);
    CHECK(text.find("witness: rows 4 and 7") != std::string::npos);
    CHECK(text.find("row 4: VOLUMEN=40, PESO=420") != std::string::npos);
    CHECK(text.find("row 7: VOLUMEN=40, PESO=360") != std::string::npos);

    const auto doc = nlohmann::json::parse(fdscan::render_json(report));
    CHECK(doc["results"]["holds"] == false);
    CHECK(doc["results"]["witness"][0]["row"] == 4);
    CHECK(doc["results"]["witness"][1]["values"]["PESO"] == "360");
}

TEST_CASE("holding check has no witness section") {
    const Relation rel = fixture();
    const auto fd = fdscan::holds(rel, AttributeSet{2}, 1);  // VOLUMEN -> COLOR
    const RunReport report = fdscan::make_check_report(rel, "enviopostal.csv", fd);
    CHECK(fdscan::render_text(report).find("HOLDS") != std::string::npos);
    const auto doc = nlohmann::json::parse(fdscan::render_json(report));
    CHECK(doc["results"]["holds"] == true);
    CHECK_FALSE(doc["results"].contains("witness"));
}

TEST_CASE("json rendering is deterministic") {
    const Relation rel = fixture();
    const RunReport report =
        fdscan::make_discover_report(rel, "enviopostal.csv",
                                     fdscan::minimal_fds(rel, 3), std::nullopt, 3);
    CHECK(fdscan::render_json(report) == fdscan::render_json(report));
}

TEST_CASE("fd expression parsing") {
    const Relation rel = fixture();

    const auto simple = parse_fd_expression("VOLUMEN->COLOR", rel);
    CHECK(simple.lhs == AttributeSet{2});
    CHECK(simple.rhs == 1);

    const auto spaced = parse_fd_expression(" COLOR , PESO -> VOLUMEN ", rel);
    CHECK(spaced.lhs == AttributeSet{1, 3});
    CHECK(spaced.rhs == 2);

    REQUIRE_THROWS_AS(parse_fd_expression("COLOR", rel), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_fd_expression("A->B->C", rel), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_fd_expression("NOPE->COLOR", rel), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_fd_expression("COLOR->NOPE", rel), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_fd_expression("COLOR->", rel), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_fd_expression(",COLOR->PESO", rel), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_fd_expression("COLOR->COLOR", rel), std::invalid_argument);
    // Case-sensitive name matching.
    REQUIRE_THROWS_AS(parse_fd_expression("color->PESO", rel), std::invalid_argument);
}
