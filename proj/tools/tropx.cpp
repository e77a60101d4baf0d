// tropx: exact computations on tropical plane curves and rational
// polyhedral complexes: extremality certificates, balanced-weighting
// spaces, extremal decompositions, rigidity of reciprocal diagrams, and
// SVG renderings.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "trop/corpus.hpp"
#include "trop/decompose.hpp"
#include "trop/jsonio.hpp"
#include "trop/reciprocal.hpp"
#include "trop/svg.hpp"

#ifndef TROP_FIXTURES_DIR
#define TROP_FIXTURES_DIR "fixtures"
#endif

namespace {

using namespace trop;

// Input problems exit with 2, mathematical impossibilities with 1.
const std::set<std::string> kUsageErrors = {
    "parse-error",   "bad-json",     "missing-file",  "unknown-face", "unknown-ridge",
    "unknown-vertex", "duplicate-id", "bad-dimension", "bad-edge",    "zero-denominator",
    "bad-weighting", "bad-input",    "bad-normals"};

struct Options {
    std::string poly;
    std::string complex_path;
    std::string framework_path;
    std::string weighting_path;
    std::string weighting_kind = "partial";
    std::string out;
    std::string format = "json";
    std::string render_format = "svg";
    std::string what = "curve";
    bool oracle = false;
    std::uint64_t limit = 1000000;
    std::string fixtures_dir = TROP_FIXTURES_DIR;
    bool list_only = false;
    bool freeze = false;
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw TropError("bad-input", "cannot write '" + opt.out + "'");
    out << text;
}

void emit_json(const Options& opt, const Json& j) { write_output(opt, j.dump(2) + "\n"); }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TropError("missing-file", path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw TropError("bad-json", e.what());
    }
    return j;
}

struct LoadedComplex {
    Complex complex;
    std::optional<Curve> curve;
};

LoadedComplex load_complex(const Options& opt) {
    if (!opt.poly.empty() && !opt.complex_path.empty())
        throw TropError("bad-input", "give exactly one of --poly and --complex");
    if (!opt.poly.empty()) {
        Curve c = build_curve(parse_polynomial(opt.poly));
        Complex view = c.complex;
        return {std::move(view), std::move(c)};
    }
    if (!opt.complex_path.empty()) {
        Complex cx = complex_from_json(read_json_file(opt.complex_path));
        ValidationReport rep = validate(cx);
        if (!rep.ok()) {
            std::string detail;
            for (const ValidationIssue& issue : rep.issues)
                detail += (detail.empty() ? "" : "; ") + issue.code + " " + issue.detail;
            throw TropError("invalid-complex", detail);
        }
        return {std::move(cx), std::nullopt};
    }
    throw TropError("bad-input", "need --poly or --complex");
}

int cmd_curve(const Options& opt) {
    if (opt.poly.empty()) throw TropError("bad-input", "curve needs --poly");
    Curve c = build_curve(parse_polynomial(opt.poly));
    if (opt.format == "svg") {
        write_output(opt, render_curve_svg(c));
        return 0;
    }
    Json j = curve_to_json(c);
    j["weights"] = weighting_to_json(c.complex, c.lattice_weighting.values);
    emit_json(opt, j);
    return 0;
}

int cmd_check(const Options& opt) {
    LoadedComplex lc = load_complex(opt);
    Json j;
    if (!opt.weighting_path.empty()) {
        WeightKind kind;
        if (opt.weighting_kind == "total")
            kind = WeightKind::TotalPositive;
        else if (opt.weighting_kind == "partial")
            kind = WeightKind::Partial;
        else if (opt.weighting_kind == "unrestricted")
            kind = WeightKind::Unrestricted;
        else
            throw TropError("bad-input", "--kind must be total, partial, or unrestricted");
        auto by_id = weighting_from_json(read_json_file(opt.weighting_path));
        Weighting w = make_weighting(lc.complex, by_id, kind);
        BalanceReport rep = is_balanced(lc.complex, w);
        Json bj;
        bj["balanced"] = rep.balanced;
        bj["residuals"] = Json::object();
        for (const RidgeResidual& r : rep.residuals) {
            Json comps = Json::array();
            for (const Rational& q : r.components) comps.push_back(rational_to_json(q));
            bj["residuals"][r.ridge_id] = comps;
        }
        j["balance"] = std::move(bj);
    }
    Json cert = certificate_to_json(is_extremal(lc.complex));
    j.update(cert);
    j["extremal_bound_holds"] = check_extremal_bound(lc.complex);
    if (lc.curve) j["structure"] = structure_report_to_json(structure_report(*lc.curve));
    emit_json(opt, j);
    return 0;
}

int cmd_weightings(const Options& opt) {
    LoadedComplex lc = load_complex(opt);
    BalanceMatrices bm = build_r(lc.complex);
    WeightCone cone = weight_cone(bm);
    Json j;
    j["weighting_dim"] = cone.dim;
    j["kernel_basis"] = Json::array();
    for (const RatVec& v : cone.kernel_basis)
        j["kernel_basis"].push_back(weighting_to_json(lc.complex, v));
    j["has_positive_weighting"] = has_positive_weighting(bm);
    if (opt.oracle) {
        j["vertices"] = Json::array();
        for (const RatVec& v : enumerate_vertices_bruteforce(bm, opt.limit))
            j["vertices"].push_back(weighting_to_json(lc.complex, v));
    }
    emit_json(opt, j);
    return 0;
}

int cmd_decompose(const Options& opt) {
    LoadedComplex lc = load_complex(opt);
    Decomposition d = decompose(lc.complex, opt.limit, opt.oracle);
    Json j = decomposition_to_json(lc.complex, d);
    if (opt.oracle) {
        BalanceMatrices bm = build_r(lc.complex);
        j["oracle_vertex_count"] = enumerate_vertices_bruteforce(bm, opt.limit).size();
    }
    emit_json(opt, j);
    return 0;
}

int cmd_rigidity(const Options& opt) {
    if (opt.framework_path.empty()) throw TropError("bad-input", "rigidity needs --framework");
    Framework fw = framework_from_json(read_json_file(opt.framework_path));
    RigidityCertificate cert = is_infinitesimally_rigid(fw);
    Json j;
    j["rank"] = cert.rank;
    j["required_rank"] = cert.required_rank;
    j["simplex_case"] = cert.simplex_case;
    j["infinitesimally_rigid"] = cert.rigid;
    j["kernel_dim"] = cert.kernel_dim;
    j["trivial_flex_dim"] = cert.trivial_dim;
    j["direction_rigid"] = is_direction_rigid(fw);
    j["direction_space_dim"] = direction_space(fw).dim;
    PebbleResult pr = pebble_game_23(fw.positions.size(), fw.edges);
    j["pebble_rigid"] = pr.rigid;
    emit_json(opt, j);
    return 0;
}

Json dualgraph_to_json(const DualGraph& dg, const Complex& cx) {
    Json g;
    g["regions"] = dg.region_ids;
    g["edges"] = Json::array();
    for (const DualGraphEdge& e : dg.edges) {
        Json ej;
        ej["u"] = dg.region_ids[e.u];
        ej["v"] = dg.region_ids[e.v];
        ej["face_id"] = cx.faces()[e.face].id;
        Json x = Json::array();
        for (const Int& y : e.x) x.push_back(y.str());
        ej["x_vector"] = std::move(x);
        g["edges"].push_back(std::move(ej));
    }
    return g;
}

int cmd_reciprocal(const Options& opt) {
    Json j;
    if (!opt.poly.empty()) {
        Curve c = build_curve(parse_polynomial(opt.poly));
        DualGraph dg = dual_graph(c);
        ReciprocalDiagram rd = build_reciprocal(dg, c.lattice_weighting.values);
        DualityReport rep = duality_report(c);
        j["framework"] = framework_to_json(rd.framework);
        j["dual_graph"] = dualgraph_to_json(dg, c.complex);
        j["recovered_weights"] =
            weighting_to_json(c.complex, weighting_from_diagram(dg, rd.framework));
        j["extremal"] = rep.extremal;
        j["direction_rigid"] = rep.direction_rigid;
        j["infinitesimally_rigid"] = rep.inf_rigid;
        j["agree"] = rep.agree;
    } else if (!opt.complex_path.empty()) {
        // Explicit hypersurfaces ship their dual graph; the weighting to
        // realize defaults to the all-ones map unless --weighting is given.
        Json input = read_json_file(opt.complex_path);
        if (!input.contains("dual_graph"))
            throw TropError("bad-input", "complex input needs a dual_graph block");
        Complex cx = complex_from_json(input);
        DualGraph dg = dualgraph_from_json(input.at("dual_graph"), cx);
        RatVec w(cx.faces().size(), Rational(1));
        if (!opt.weighting_path.empty()) {
            auto by_id = weighting_from_json(read_json_file(opt.weighting_path));
            w = make_weighting(cx, by_id, WeightKind::Unrestricted).values;
        }
        ReciprocalDiagram rd = build_reciprocal(dg, w);
        j["framework"] = framework_to_json(rd.framework);
        j["dual_graph"] = dualgraph_to_json(dg, cx);
        j["recovered_weights"] = weighting_to_json(cx, weighting_from_diagram(dg, rd.framework));
        j["extremal"] = is_extremal(cx).extremal;
        bool dir = is_direction_rigid(rd.framework);
        j["direction_rigid"] = dir;
        if (rd.framework.dim == 2)
            j["infinitesimally_rigid"] = is_infinitesimally_rigid(rd.framework).rigid;
        j["agree"] = j["extremal"] == dir;
    } else {
        throw TropError("bad-input", "reciprocal needs --poly or --complex");
    }
    emit_json(opt, j);
    return 0;
}

int cmd_render(const Options& opt) {
    if (opt.render_format != "svg")
        throw TropError("bad-input", "render emits svg only");
    std::string svg;
    if (!opt.framework_path.empty()) {
        Framework fw = framework_from_json(read_json_file(opt.framework_path));
        svg = render_framework_svg(fw, true);
    } else if (!opt.poly.empty()) {
        Curve c = build_curve(parse_polynomial(opt.poly));
        if (opt.what == "curve") {
            svg = render_curve_svg(c);
        } else if (opt.what == "subdivision") {
            svg = render_subdivision_svg(c.sd);
        } else if (opt.what == "diagram") {
            DualGraph dg = dual_graph(c);
            svg = render_framework_svg(build_reciprocal(dg, c.lattice_weighting.values).framework,
                                       true);
        } else {
            throw TropError("bad-input", "--what must be curve, subdivision, or diagram");
        }
    } else {
        throw TropError("bad-input", "render needs --poly or --framework");
    }
    write_output(opt, svg);
    return 0;
}

int cmd_fixtures(const Options& opt) {
    if (opt.freeze) {
        write_manifest(opt.fixtures_dir);
        write_output(opt, "manifest written\n");
        return 0;
    }
    if (opt.list_only) {
        std::string text;
        for (const std::string& name : list_fixtures(opt.fixtures_dir)) text += name + "\n";
        write_output(opt, text);
        return 0;
    }
    auto results = run_all(opt.fixtures_dir);
    std::string text;
    bool all_ok = true;
    for (const std::string& p : verify_manifest(opt.fixtures_dir)) {
        text += "FAIL manifest: " + p + "\n";
        all_ok = false;
    }
    for (const FixtureResult& r : results) {
        text += (r.passed ? "PASS " : "FAIL ") + r.name + "\n";
        for (const std::string& f : r.failures) text += "  " + f + "\n";
        all_ok = all_ok && r.passed;
    }
    write_output(opt, text);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tropical-variety extremality and reciprocal-diagram toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool input_opts) {
        if (input_opts) {
            sub->add_option("--poly", opt.poly, "tropical polynomial in x,y");
            sub->add_option("--complex", opt.complex_path, "complex JSON file");
        }
        sub->add_option("--out", opt.out, "output path (default: stdout)");
        sub->add_option("--limit", opt.limit, "vertex-enumeration candidate cap");
    };

    CLI::App* curve = app.add_subcommand("curve", "curve geometry of a polynomial");
    add_common(curve, true);
    curve->add_option("--format", opt.format, "json or svg");

    CLI::App* check = app.add_subcommand("check", "extremality certificate");
    add_common(check, true);
    check->add_option("--weighting", opt.weighting_path,
                      "weighting JSON to test for balance");
    check->add_option("--kind", opt.weighting_kind,
                      "weighting strictness: total, partial, or unrestricted");

    CLI::App* weightings = app.add_subcommand("weightings", "balanced weighting space");
    add_common(weightings, true);
    weightings->add_flag("--oracle", opt.oracle, "enumerate the polytope vertices");

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "extremal decomposition");
    add_common(decompose_cmd, true);
    decompose_cmd->add_flag("--oracle", opt.oracle,
                            "force brute-force vertex enumeration instead of the walk");

    CLI::App* rigidity = app.add_subcommand("rigidity", "framework rigidity");
    rigidity->add_option("--framework", opt.framework_path, "framework JSON file")->required();
    add_common(rigidity, false);

    CLI::App* reciprocal =
        app.add_subcommand("reciprocal", "reciprocal diagram of a hypersurface");
    add_common(reciprocal, true);
    reciprocal->add_option("--weighting", opt.weighting_path,
                           "weighting JSON to realize (explicit complexes)");

    CLI::App* render = app.add_subcommand("render", "svg rendering");
    add_common(render, true);
    render->add_option("--framework", opt.framework_path, "framework JSON file");
    render->add_option("--format", opt.render_format, "svg");
    render->add_option("--what", opt.what, "curve, subdivision, or diagram");

    CLI::App* fixtures = app.add_subcommand("fixtures", "run the fixture corpus");
    fixtures->add_option("--dir", opt.fixtures_dir, "fixture directory");
    fixtures->add_flag("--list", opt.list_only, "list fixture names only");
    fixtures->add_flag("--freeze", opt.freeze, "re-pin the fixture manifest");
    add_common(fixtures, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (curve->parsed()) return cmd_curve(opt);
        if (check->parsed()) return cmd_check(opt);
        if (weightings->parsed()) return cmd_weightings(opt);
        if (decompose_cmd->parsed()) return cmd_decompose(opt);
        if (rigidity->parsed()) return cmd_rigidity(opt);
        if (reciprocal->parsed()) return cmd_reciprocal(opt);
        if (render->parsed()) return cmd_render(opt);
        if (fixtures->parsed()) return cmd_fixtures(opt);
    } catch (const TropError& e) {
        Json diag;
        diag["error"] = e.code();
        diag["detail"] = e.what();
        std::cout << diag.dump(2) << "\n";
        return kUsageErrors.count(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        Json diag;
        diag["error"] = "internal";
        diag["detail"] = e.what();
        std::cout << diag.dump(2) << "\n";
        return 1;
    }
    return 2;
}
