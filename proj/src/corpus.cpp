#include "trop/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "trop/cone.hpp"
#include "trop/decompose.hpp"
#include "trop/reciprocal.hpp"

namespace fs = std::filesystem;

namespace trop {

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw TropError("missing-file", p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_ws(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

class Checker {
public:
    explicit Checker(const Json& expected) : expected_(expected) {}

    template <typename Got>
    void eq(const std::string& field, const Got& got) {
        if (!expected_.contains(field)) return;
        Json got_json = got;
        if (expected_.at(field) != got_json)
            fail(field, expected_.at(field).dump(), got_json.dump());
    }

    bool wants(const std::string& field) const { return expected_.contains(field); }
    const Json& at(const std::string& field) const { return expected_.at(field); }

    void fail(const std::string& field, const std::string& want, const std::string& got) {
        failures.push_back(field + ": expected " + want + ", got " + got);
    }

    std::vector<std::string> failures;

private:
    const Json& expected_;
};

std::vector<std::size_t> perm_or_identity(const Checker& ck, const std::string& field,
                                          std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    if (ck.wants(field)) {
        auto v = ck.at(field).get<std::vector<std::size_t>>();
        if (v.size() == n) perm = v;
    }
    return perm;
}

void check_matrix(Checker& ck, const RatMatrix& ours, std::size_t block_size) {
    if (!ck.wants("r_matrix")) return;
    const Json& mat = ck.at("r_matrix");
    auto row_perm = perm_or_identity(ck, "r_row_perm", mat.size());
    std::size_t blocks = ours.cols() / block_size;
    auto col_perm = perm_or_identity(ck, "r_col_block_perm", blocks);
    bool ok = mat.size() == ours.rows();
    for (std::size_t k = 0; k < mat.size() && ok; ++k) {
        const Json& row = mat.at(k);
        ok = row.size() == ours.cols();
        for (std::size_t j = 0; j < row.size() && ok; ++j) {
            std::size_t block = j / block_size, inner = j % block_size;
            Rational want = rational_from_json(row.at(j));
            ok = ours(row_perm[k], col_perm[block] * block_size + inner) == want;
        }
    }
    if (!ok) ck.fail("r_matrix", "frozen matrix (under recorded permutation)", "mismatch");
}

void check_kernel(Checker& ck, const std::vector<RatVec>& kernel, std::size_t n) {
    if (!ck.wants("kernel_vectors")) return;
    const Json& gens = ck.at("kernel_vectors");
    auto row_perm = perm_or_identity(ck, "r_row_perm", n);
    std::vector<RatVec> expected;
    for (const Json& g : gens) {
        RatVec v(n, Rational(0));
        for (std::size_t k = 0; k < g.size(); ++k) v[row_perm[k]] = rational_from_json(g.at(k));
        expected.push_back(std::move(v));
    }
    if (!same_row_space(kernel, expected))
        ck.fail("kernel_vectors", "span of frozen generators", "different span");
}

void check_complex(Checker& ck, const Complex& c, const Curve* curve) {
    ck.eq("num_faces", c.faces().size());
    ck.eq("num_ridges", c.ridges().size());
    if (ck.wants("validate_ok")) ck.eq("validate_ok", validate(c).ok());
    ck.eq("extremal_bound", check_extremal_bound(c));

    BalanceMatrices bm = build_r(c);
    std::size_t rk = rank(bm.r);
    ck.eq("rank", rk);
    ck.eq("weighting_dim", c.faces().size() - rk);
    check_matrix(ck, bm.r, bm.t);
    check_kernel(ck, left_kernel_basis(bm.r), c.faces().size());

    if (ck.wants("extremal")) {
        try {
            ck.eq("extremal", is_extremal(c).extremal);
        } catch (const TropError& e) {
            ck.fail("extremal", ck.at("extremal").dump(), std::string("error ") + e.what());
        }
    }

    std::uint64_t limit = ck.wants("limit") ? ck.at("limit").get<std::uint64_t>() : 1000000;
    if (ck.wants("vertex_count"))
        ck.eq("vertex_count", enumerate_vertices_bruteforce(bm, limit).size());

    if (ck.wants("decompose_parts") || ck.wants("unique") || ck.wants("bound_m") ||
        ck.wants("part_supports")) {
        Decomposition d = decompose(c, limit);
        ck.eq("decompose_parts", d.parts.size());
        ck.eq("unique", d.unique);
        ck.eq("bound_m", d.bound_m);
        if (ck.wants("part_supports")) {
            std::vector<std::vector<std::string>> got;
            for (const auto& p : d.parts) {
                std::vector<std::string> ids;
                for (std::size_t f : p.support) ids.push_back(c.faces()[f].id);
                got.push_back(std::move(ids));
            }
            std::sort(got.begin(), got.end());
            auto want = ck.at("part_supports").get<std::vector<std::vector<std::string>>>();
            for (auto& w : want) std::sort(w.begin(), w.end());
            std::sort(want.begin(), want.end());
            if (got != want) ck.fail("part_supports", ck.at("part_supports").dump(), Json(got).dump());
        }
        std::vector<std::pair<std::vector<std::size_t>, RatVec>> pairs;
        for (const auto& p : d.parts) pairs.emplace_back(p.support, p.weighting);
        if (!verify_decomposition(c, pairs))
            ck.fail("decomposition", "verify_decomposition to pass", "failed");
    }
    if (ck.wants("unique_decomposition_present"))
        ck.eq("unique_decomposition_present", unique_decomposition(c, limit).has_value());

    if (curve && ck.wants("lattice_weighting_balanced"))
        ck.eq("lattice_weighting_balanced",
              is_balanced(bm, curve->lattice_weighting.values).balanced);
}

void check_poly(Checker& ck, const std::string& text) {
    Curve c = build_curve(parse_polynomial(text));
    ck.eq("curve_vertices", c.vertices.size());
    ck.eq("curve_edges", c.edges.size());
    if (ck.wants("curve_rays")) {
        std::size_t rays = 0;
        for (const CurveEdge& e : c.edges) rays += e.kind == CurveEdgeKind::Ray;
        ck.eq("curve_rays", rays);
    }
    if (ck.wants("weight_multiset")) {
        std::vector<long> ws;
        for (const CurveEdge& e : c.edges) ws.push_back(e.weight);
        std::sort(ws.begin(), ws.end());
        ck.eq("weight_multiset", ws);
    }
    check_complex(ck, c.complex, &c);

    if (ck.wants("pebble_rigid") || ck.wants("necessary_conditions_pass")) {
        StructureReport rep = structure_report(c);
        ck.eq("pebble_rigid", rep.dual_graph_rigid);
        ck.eq("necessary_conditions_pass", rep.necessary_conditions_pass);
    }
    if (ck.wants("duality_agree") || ck.wants("reciprocal_inf_rigid") ||
        ck.wants("reciprocal_dir_rigid")) {
        DualityReport rep = duality_report(c);
        ck.eq("duality_agree", rep.agree);
        ck.eq("reciprocal_inf_rigid", rep.inf_rigid);
        ck.eq("reciprocal_dir_rigid", rep.direction_rigid);
    }
}

void check_framework(Checker& ck, const Framework& fw) {
    RatMatrix r = rigidity_matrix(fw);
    ck.eq("rigidity_rank", rank(r));
    ck.eq("inf_rigid", is_infinitesimally_rigid(fw).rigid);
    if (ck.wants("dir_rigid")) ck.eq("dir_rigid", is_direction_rigid(fw));
    if (ck.wants("rigidity_matrix")) {
        const Json& mat = ck.at("rigidity_matrix");
        auto row_perm = perm_or_identity(ck, "row_perm", mat.size());
        std::vector<long> signs(mat.size(), 1);
        if (ck.wants("row_signs")) signs = ck.at("row_signs").get<std::vector<long>>();
        bool ok = mat.size() == r.rows();
        for (std::size_t k = 0; k < mat.size() && ok; ++k) {
            ok = mat.at(k).size() == r.cols();
            for (std::size_t j = 0; j < r.cols() && ok; ++j)
                ok = r(row_perm[k], j) * Rational(signs[k]) ==
                     rational_from_json(mat.at(k).at(j));
        }
        if (!ok)
            ck.fail("rigidity_matrix", "frozen matrix (under recorded row order and signs)",
                    "mismatch");
    }
    if (ck.wants("pebble_rigid"))
        ck.eq("pebble_rigid", pebble_game_23(fw.positions.size(), fw.edges).rigid);
}

void check_graph(Checker& ck, const Json& input) {
    std::size_t n = input.at("vertex_count").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const Json& e : input.at("edges"))
        edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    PebbleResult pr = pebble_game_23(n, edges);
    ck.eq("pebble_rigid", pr.rigid);
    if (ck.wants("tight_edges")) ck.eq("tight_edges", pr.tight_subgraph.size());
}

}  // namespace

Fixture load_fixture(const std::string& dir, const std::string& name) {
    Fixture fx;
    fx.name = name;
    fs::path base = fs::path(dir) / name;
    fx.expected = Json::parse(read_file(base / "expected.json"));
    fx.kind = fx.expected.value("kind", "poly");
    if (fx.kind == "poly")
        fx.poly_text = strip_ws(read_file(base / "input.txt"));
    else
        fx.input_json = Json::parse(read_file(base / "input.json"));
    return fx;
}

std::vector<std::string> list_fixtures(const std::string& dir) {
    std::vector<std::string> names;
    if (!fs::is_directory(dir)) throw TropError("missing-file", dir);
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_directory() && fs::exists(entry.path() / "expected.json"))
            names.push_back(entry.path().filename().string());
    std::sort(names.begin(), names.end());
    return names;
}

FixtureResult run_fixture(const Fixture& fx) {
    FixtureResult res;
    res.name = fx.name;
    Checker ck(fx.expected);
    try {
        if (fx.kind == "poly")
            check_poly(ck, fx.poly_text);
        else if (fx.kind == "complex")
            check_complex(ck, complex_from_json(fx.input_json), nullptr);
        else if (fx.kind == "framework")
            check_framework(ck, framework_from_json(fx.input_json));
        else if (fx.kind == "graph")
            check_graph(ck, fx.input_json);
        else
            ck.fail("kind", "poly|complex|framework|graph", fx.kind);
    } catch (const std::exception& e) {
        ck.fail("run", "no exception", e.what());
    }
    res.failures = std::move(ck.failures);
    res.passed = res.failures.empty();
    return res;
}

std::vector<FixtureResult> run_all(const std::string& dir) {
    std::vector<FixtureResult> out;
    for (const std::string& name : list_fixtures(dir))
        out.push_back(run_fixture(load_fixture(dir, name)));
    return out;
}

namespace {

constexpr const char* kManifestName = "MANIFEST.fnv";

std::vector<std::string> fixture_files(const std::string& dir) {
    std::vector<std::string> rel;
    for (const std::string& name : list_fixtures(dir))
        for (const auto& entry : fs::directory_iterator(fs::path(dir) / name))
            if (entry.is_regular_file())
                rel.push_back(name + "/" + entry.path().filename().string());
    std::sort(rel.begin(), rel.end());
    return rel;
}

}  // namespace

std::string fingerprint_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TropError("missing-file", path);
    std::uint64_t h = 14695981039346656037ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_manifest(const std::string& dir) {
    std::ofstream out(fs::path(dir) / kManifestName, std::ios::binary);
    for (const std::string& rel : fixture_files(dir))
        out << fingerprint_file((fs::path(dir) / rel).string()) << "  " << rel << "\n";
}

std::vector<std::string> verify_manifest(const std::string& dir) {
    std::vector<std::string> problems;
    fs::path manifest = fs::path(dir) / kManifestName;
    if (!fs::exists(manifest)) return {"manifest missing: " + manifest.string()};
    std::map<std::string, std::string> pinned;
    std::ifstream in(manifest);
    std::string hash, rel;
    while (in >> hash >> rel) pinned[rel] = hash;
    for (const std::string& rel : fixture_files(dir)) {
        auto it = pinned.find(rel);
        if (it == pinned.end()) {
            problems.push_back("not pinned: " + rel);
            continue;
        }
        std::string got = fingerprint_file((fs::path(dir) / rel).string());
        if (got != it->second)
            problems.push_back("fingerprint mismatch: " + rel);
        pinned.erase(it);
    }
    for (const auto& [rel, h] : pinned) problems.push_back("pinned file missing: " + rel);
    return problems;
}

}  // namespace trop
