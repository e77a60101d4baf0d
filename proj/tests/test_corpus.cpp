#include "doctest.h"
#include "trop/corpus.hpp"

using namespace trop;

TEST_CASE("fixture listing finds the full corpus") {
    auto names = list_fixtures(TROP_FIXTURES_DIR);
    CHECK(names.size() >= 13);
    CHECK(std::find(names.begin(), names.end(), "hyperplane3d") != names.end());
    CHECK(std::find(names.begin(), names.end(), "triple-union") != names.end());
    CHECK(std::find(names.begin(), names.end(), "prism-frame") != names.end());
}

TEST_CASE("every fixture passes") {
    for (const FixtureResult& res : run_all(TROP_FIXTURES_DIR)) {
        INFO(res.name);
        for (const std::string& f : res.failures) {
            INFO(f);
        }
        CHECK(res.passed);
    }
}

TEST_CASE("fixture loader reports mismatches rather than passing silently") {
    Fixture fx = load_fixture(TROP_FIXTURES_DIR, "standard-line");
    fx.expected["curve_vertices"] = 7;
    FixtureResult res = run_fixture(fx);
    CHECK(!res.passed);
    REQUIRE(!res.failures.empty());
    CHECK(res.failures[0].find("curve_vertices") != std::string::npos);
}

TEST_CASE("unknown fixture directories fail cleanly") {
    CHECK_THROWS_AS(load_fixture(TROP_FIXTURES_DIR, "no-such-fixture"), TropError);
}

TEST_CASE("fixture files match the pinned manifest") {
    auto problems = verify_manifest(TROP_FIXTURES_DIR);
    for (const std::string& p : problems) {
        INFO(p);
    }
    CHECK(problems.empty());
}
