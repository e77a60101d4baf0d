#pragma once

#include <string>
#include <vector>

#include "trop/jsonio.hpp"

namespace trop {

// A fixture is a directory fixtures/<name>/ holding an input (polynomial
// text, complex JSON, framework JSON, or a bare graph), the expected
// certificates in expected.json, and a provenance note describing where
// each number comes from.
struct Fixture {
    std::string name;
    std::string kind;  // "poly" | "complex" | "framework" | "graph"
    std::string poly_text;
    Json input_json;
    Json expected;
};

Fixture load_fixture(const std::string& dir, const std::string& name);
std::vector<std::string> list_fixtures(const std::string& dir);

struct FixtureResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> failures;  // "field: expected X, got Y"
};

FixtureResult run_fixture(const Fixture& fx);
std::vector<FixtureResult> run_all(const std::string& dir);

// Fixtures are frozen: MANIFEST.fnv pins a 64-bit FNV-1a fingerprint per
// fixture file so accidental edits surface as failures.
std::string fingerprint_file(const std::string& path);
void write_manifest(const std::string& dir);
std::vector<std::string> verify_manifest(const std::string& dir);  // mismatch descriptions

}  // namespace trop
