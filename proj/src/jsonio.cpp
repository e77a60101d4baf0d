#include "trop/jsonio.hpp"

namespace trop {

namespace {

std::string id_from_json(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long>());
    throw TropError("bad-json", "ids must be strings or integers");
}

RatVec rat_vec_from_json(const Json& j) {
    if (!j.is_array()) throw TropError("bad-json", "expected an array of rationals");
    RatVec v;
    for (const Json& e : j) v.push_back(rational_from_json(e));
    return v;
}

Json rat_vec_to_json(const RatVec& v) {
    Json out = Json::array();
    for (const Rational& q : v) out.push_back(rational_to_json(q));
    return out;
}

std::vector<RatVec> basis_from_json(const Json& j) {
    std::vector<RatVec> basis;
    for (const Json& row : j) basis.push_back(rat_vec_from_json(row));
    return basis;
}

IntVec int_vec_from_json(const Json& j) {
    IntVec v;
    for (const Json& e : j) {
        if (e.is_number_integer())
            v.push_back(Int(e.get<long>()));
        else if (e.is_string())
            v.push_back(Int(e.get<std::string>()));
        else
            throw TropError("bad-json", "expected integer entries");
    }
    return v;
}

}  // namespace

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw TropError("bad-json", "rationals must be strings like \"p/q\" or integers");
}

Complex complex_from_json(const Json& j) try {
    if (!j.contains("ambient_dim") || !j.contains("dim"))
        throw TropError("bad-json", "complex needs ambient_dim and dim");
    std::vector<Ridge> ridges;
    for (const Json& r : j.value("ridges", Json::array())) {
        Ridge ridge;
        ridge.id = id_from_json(r.at("id"));
        ridge.point = rat_vec_from_json(r.at("point"));
        ridge.basis = basis_from_json(r.value("basis", Json::array()));
        ridges.push_back(std::move(ridge));
    }
    std::vector<MaxFace> faces;
    for (const Json& f : j.at("faces")) {
        MaxFace face;
        face.id = id_from_json(f.at("id"));
        face.point = rat_vec_from_json(f.at("point"));
        face.basis = basis_from_json(f.at("basis"));
        for (const Json& rid : f.value("ridges", Json::array()))
            face.ridge_ids.push_back(id_from_json(rid));
        faces.push_back(std::move(face));
    }
    Complex c(j.at("ambient_dim").get<std::size_t>(), j.at("dim").get<std::size_t>(),
              std::move(ridges), std::move(faces));
    if (j.contains("normals")) {
        for (const auto& [rid, arr] : j.at("normals").items()) {
            std::vector<IntVec> normals;
            for (const Json& n : arr) normals.push_back(int_vec_from_json(n));
            c.set_ridge_normals(c.ridge_index(rid), std::move(normals));
        }
    }
    return c;
} catch (const Json::exception& e) {
    throw TropError("bad-json", e.what());
}

Json complex_to_json(const Complex& c) {
    Json j;
    j["ambient_dim"] = c.ambient_dim();
    j["dim"] = c.dim();
    j["ridges"] = Json::array();
    for (const Ridge& r : c.ridges()) {
        Json rj;
        rj["id"] = r.id;
        rj["point"] = rat_vec_to_json(r.point);
        rj["basis"] = Json::array();
        for (const RatVec& b : r.basis) rj["basis"].push_back(rat_vec_to_json(b));
        j["ridges"].push_back(std::move(rj));
    }
    j["faces"] = Json::array();
    for (const MaxFace& f : c.faces()) {
        Json fj;
        fj["id"] = f.id;
        fj["point"] = rat_vec_to_json(f.point);
        fj["basis"] = Json::array();
        for (const RatVec& b : f.basis) fj["basis"].push_back(rat_vec_to_json(b));
        fj["ridges"] = f.ridge_ids;
        j["faces"].push_back(std::move(fj));
    }
    return j;
}

std::map<std::string, Rational> weighting_from_json(const Json& j) try {
    std::map<std::string, Rational> out;
    for (const auto& [id, value] : j.items()) out[id] = rational_from_json(value);
    return out;
} catch (const Json::exception& e) {
    throw TropError("bad-json", e.what());
}

Json weighting_to_json(const Complex& c, const RatVec& values) {
    Json j = Json::object();
    for (std::size_t f = 0; f < values.size(); ++f)
        if (values[f] != 0) j[c.faces()[f].id] = rational_to_json(values[f]);
    return j;
}

Framework framework_from_json(const Json& j) try {
    std::map<std::string, RatVec> vertices;
    for (const auto& [id, point] : j.at("vertices").items())
        vertices[id] = rat_vec_from_json(point);
    std::vector<std::pair<std::string, std::string>> edges;
    for (const Json& e : j.at("edges"))
        edges.emplace_back(id_from_json(e.at(0)), id_from_json(e.at(1)));
    return make_framework(j.at("dim").get<std::size_t>(), vertices, edges);
} catch (const Json::exception& e) {
    throw TropError("bad-json", e.what());
}

Json framework_to_json(const Framework& fw) {
    Json j;
    j["dim"] = fw.dim;
    j["vertices"] = Json::object();
    for (std::size_t v = 0; v < fw.vertex_ids.size(); ++v)
        j["vertices"][fw.vertex_ids[v]] = rat_vec_to_json(fw.positions[v]);
    j["edges"] = Json::array();
    for (auto [u, v] : fw.edges)
        j["edges"].push_back(Json::array({fw.vertex_ids[u], fw.vertex_ids[v]}));
    return j;
}

DualGraph dualgraph_from_json(const Json& j, const Complex& c) try {
    DualGraph dg;
    dg.face_count = c.faces().size();
    for (const Json& r : j.at("regions")) dg.region_ids.push_back(id_from_json(r));
    std::sort(dg.region_ids.begin(), dg.region_ids.end());
    auto region_index = [&](const std::string& id) {
        auto it = std::lower_bound(dg.region_ids.begin(), dg.region_ids.end(), id);
        if (it == dg.region_ids.end() || *it != id)
            throw TropError("bad-json", "unknown region '" + id + "'");
        return static_cast<std::size_t>(it - dg.region_ids.begin());
    };
    for (const Json& e : j.at("edges")) {
        DualGraphEdge edge;
        std::size_t a = region_index(id_from_json(e.at("u")));
        std::size_t b = region_index(id_from_json(e.at("v")));
        edge.x = int_vec_from_json(e.at("x_vector"));
        if (a > b) {
            // Store with u < v; the annotation flips with the orientation.
            std::swap(a, b);
            for (Int& y : edge.x) y = -y;
        }
        edge.u = a;
        edge.v = b;
        edge.face = c.face_index(id_from_json(e.at("face_id")));
        dg.edges.push_back(std::move(edge));
    }
    return dg;
} catch (const Json::exception& e) {
    throw TropError("bad-json", e.what());
}

Json curve_to_json(const Curve& c) {
    Json j;
    j["degenerate"] = c.sd.degenerate;
    j["vertices"] = Json::array();
    for (const auto& v : c.vertices)
        j["vertices"].push_back(rat_vec_to_json({v[0], v[1]}));
    j["edges"] = Json::array();
    for (const CurveEdge& e : c.edges) {
        Json ej;
        ej["id"] = e.face_id;
        ej["kind"] = e.kind == CurveEdgeKind::Segment ? "segment"
                     : e.kind == CurveEdgeKind::Ray   ? "ray"
                                                      : "line";
        if (e.kind == CurveEdgeKind::Segment) ej["vertices"] = Json::array({e.v0, e.v1});
        if (e.kind == CurveEdgeKind::Ray) ej["vertices"] = Json::array({e.v0});
        ej["direction"] = Json::array(
            {static_cast<long>(e.direction[0]), static_cast<long>(e.direction[1])});
        ej["weight"] = e.weight;
        j["edges"].push_back(std::move(ej));
    }
    j["newton_polytope"] = Json::array();
    for (const Exponent& p : c.sd.newton_polytope)
        j["newton_polytope"].push_back(Json::array({p[0], p[1]}));
    j["subdivision_points"] = Json::array();
    for (const Exponent& p : c.sd.points)
        j["subdivision_points"].push_back(Json::array({p[0], p[1]}));
    return j;
}

Json certificate_to_json(const ExtremalityCertificate& cert) {
    Json j;
    j["extremal"] = cert.extremal;
    j["rank"] = cert.rank;
    j["num_faces"] = cert.num_faces;
    j["weighting_dim"] = cert.kernel_basis.size();
    j["kernel_basis"] = Json::array();
    for (const RatVec& v : cert.kernel_basis) j["kernel_basis"].push_back(rat_vec_to_json(v));
    return j;
}

Json decomposition_to_json(const Complex& c, const Decomposition& d) {
    Json j;
    j["parts"] = Json::array();
    for (const DecompositionPart& p : d.parts) {
        Json pj;
        pj["support"] = Json::array();
        for (std::size_t f : p.support) pj["support"].push_back(c.faces()[f].id);
        pj["weighting"] = weighting_to_json(c, p.weighting);
        j["parts"].push_back(std::move(pj));
    }
    j["unique"] = d.unique;
    j["bound_m"] = d.bound_m;
    return j;
}

Json structure_report_to_json(const StructureReport& rep) {
    Json j;
    j["degree_sequence"] = rep.degree_sequence;
    j["half_edges"] = rep.half_edge_count;
    j["has_trivalent_vertex"] = rep.has_trivalent_vertex;
    j["missing_trivalent_vertex"] = rep.missing_trivalent_vertex;
    j["single_trivalent_shape_violated"] = rep.single_trivalent_shape_violated;
    j["small_faces_obstruction"] = rep.small_faces_obstruction;
    j["separated_half_edge_pair"] = rep.separated_half_edge_pair;
    j["dual_graph_rigid"] = rep.dual_graph_rigid;
    j["necessary_conditions_pass"] = rep.necessary_conditions_pass;
    return j;
}

}  // namespace trop
