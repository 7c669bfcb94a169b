#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "helpzc.h"

namespace {
const char* kA6Path = HELPZC_DATA_DIR "/a6.json";
}

TEST_CASE("load, validate, inspect") {
    helpzc_group* g = nullptr;
    REQUIRE(helpzc_group_load_file(kA6Path, &g) == HELPZC_OK);
    CHECK(std::string(helpzc_group_name(g)) == "A6");
    CHECK(helpzc_group_exponent(g) == 60);

    char* violations = reinterpret_cast<char*>(1);
    CHECK(helpzc_group_validate(g, &violations) == HELPZC_OK);
    CHECK(violations == nullptr);
    helpzc_group_free(g);
}

TEST_CASE("error paths set last_error") {
    helpzc_group* g = nullptr;
    CHECK(helpzc_group_load_file("/nonexistent/file.json", &g) != HELPZC_OK);
    CHECK(g == nullptr);
    CHECK(std::strlen(helpzc_last_error()) > 0);

    CHECK(helpzc_group_parse("{not json", &g) != HELPZC_OK);
    CHECK(g == nullptr);

    REQUIRE(helpzc_group_load_file(kA6Path, &g) == HELPZC_OK);
    helpzc_report* r = nullptr;
    CHECK(helpzc_solve_order(g, 7, nullptr, &r) != HELPZC_OK);
    CHECK(r == nullptr);
    CHECK(std::string(helpzc_last_error()).find("does not divide exponent") !=
          std::string::npos);
    helpzc_group_free(g);
}

TEST_CASE("single-order solve via C API") {
    helpzc_group* g = nullptr;
    REQUIRE(helpzc_group_load_file(kA6Path, &g) == HELPZC_OK);

    helpzc_report* r = nullptr;
    REQUIRE(helpzc_solve_order(g, 15, nullptr, &r) == HELPZC_OK);
    CHECK(helpzc_report_verified(r) == 1);
    CHECK(helpzc_report_exceptional_count(r) == 0);

    char* text = nullptr;
    REQUIRE(helpzc_report_render_text(r, &text) == HELPZC_OK);
    CHECK(std::string(text).find("order 15: no solutions") != std::string::npos);
    helpzc_string_free(text);
    helpzc_report_free(r);
    helpzc_group_free(g);
}

TEST_CASE("full solve via C API with and without Brauer tables") {
    helpzc_group* g = nullptr;
    REQUIRE(helpzc_group_load_file(kA6Path, &g) == HELPZC_OK);

    helpzc_solve_options opts;
    helpzc_solve_options_init(&opts);
    CHECK(opts.use_brauer == 1);

    helpzc_report* r = nullptr;
    REQUIRE(helpzc_solve_all(g, &opts, &r) == HELPZC_OK);
    CHECK(helpzc_report_verified(r) == 0);
    CHECK(helpzc_report_exceptional_count(r) == 2);

    char* json_text = nullptr;
    REQUIRE(helpzc_report_render_json(r, &json_text) == HELPZC_OK);
    auto doc = nlohmann::json::parse(json_text);
    CHECK(doc.at("group") == "A6");
    CHECK(doc.at("status") == "open");
    bool found_612 = false, found_621 = false;
    for (const auto& ord : doc.at("orders")) {
        if (ord.at("n") != 6) continue;
        for (const auto& sol : ord.at("solutions")) {
            if (sol.at("tuple") == nlohmann::json{{"2a", -2}, {"3a", 1}, {"3b", 2}})
                found_612 = true;
            if (sol.at("tuple") == nlohmann::json{{"2a", -2}, {"3a", 2}, {"3b", 1}})
                found_621 = true;
        }
    }
    CHECK(found_612);
    CHECK(found_621);
    helpzc_string_free(json_text);
    helpzc_report_free(r);
    helpzc_group_free(g);
}
