#include "trop/reciprocal.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace trop {

DualGraph dual_graph(const Curve& c) {
    if (c.sd.degenerate || c.sd.cells.empty())
        throw TropError("degenerate-curve", "the dual subdivision has no 2-cells");
    DualGraph dg;
    dg.face_count = c.edges.size();
    std::map<Exponent, std::size_t> region_index;
    for (std::size_t i = 0; i < c.sd.points.size(); ++i) {
        region_index[c.sd.points[i]] = i;
        std::string digits = std::to_string(i);
        while (digits.size() < 2) digits.insert(digits.begin(), '0');
        dg.region_ids.push_back("r" + digits);
    }
    for (std::size_t fi = 0; fi < c.edges.size(); ++fi) {
        const SdEdge& se = c.sd.edges[c.edges[fi].sd_edge];
        DualGraphEdge e;
        std::size_t ia = region_index.at(se.a), ib = region_index.at(se.b);
        e.u = std::min(ia, ib);
        e.v = std::max(ia, ib);
        e.face = fi;
        const Exponent& pu = c.sd.points[e.u];
        const Exponent& pv = c.sd.points[e.v];
        e.x = primitive_vector({Int(pu[0] - pv[0]), Int(pu[1] - pv[1])});
        dg.edges.push_back(std::move(e));
    }
    return dg;
}

ReciprocalDiagram build_reciprocal(const DualGraph& dg, const RatVec& weighting) {
    if (weighting.size() != dg.face_count)
        throw TropError("bad-weighting", "weighting size does not match the face count");
    const std::size_t n = dg.region_ids.size();
    if (n == 0) throw TropError("bad-input", "dual graph has no regions");
    const std::size_t d = dg.edges.empty() ? 2 : dg.edges.front().x.size();

    // Incidence sorted by neighbour index for a deterministic BFS tree.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbour, edge)
    for (std::size_t e = 0; e < dg.edges.size(); ++e) {
        adj[dg.edges[e].u].emplace_back(dg.edges[e].v, e);
        adj[dg.edges[e].v].emplace_back(dg.edges[e].u, e);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<RatVec> pos(n, RatVec(d, Rational(0)));
    std::vector<bool> placed(n, false);
    placed[0] = true;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (auto [w, e] : adj[u]) {
            if (placed[w]) continue;
            const DualGraphEdge& edge = dg.edges[e];
            Rational scale = weighting[edge.face];
            for (std::size_t j = 0; j < d; ++j) {
                Rational step = scale * Rational(edge.x[j]);
                // p(edge.u) - p(edge.v) = w * x, so walk accordingly.
                if (w == edge.v)
                    pos[w][j] = pos[u][j] - step;
                else
                    pos[w][j] = pos[u][j] + step;
            }
            placed[w] = true;
            queue.push_back(w);
        }
    }
    for (bool p : placed)
        if (!p) throw TropError("disconnected-dual-graph", "dual graph must be connected");

    // Closure of the non-tree edges certifies balance.
    for (const DualGraphEdge& e : dg.edges)
        for (std::size_t j = 0; j < d; ++j)
            if (pos[e.u][j] - pos[e.v][j] != weighting[e.face] * Rational(e.x[j]))
                throw TropError("weighting-not-balanced",
                                "cycle through regions " + dg.region_ids[e.u] + "," +
                                    dg.region_ids[e.v] + " does not close");

    std::map<std::string, RatVec> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i) vertices[dg.region_ids[i]] = pos[i];
    for (const DualGraphEdge& e : dg.edges)
        edges.emplace_back(dg.region_ids[e.u], dg.region_ids[e.v]);

    ReciprocalDiagram rd;
    rd.framework = make_framework(d, vertices, edges);
    rd.edge_to_face.assign(rd.framework.edges.size(), 0);
    for (const DualGraphEdge& e : dg.edges) {
        std::pair<std::size_t, std::size_t> key{
            rd.framework.vertex_index(dg.region_ids[e.u]),
            rd.framework.vertex_index(dg.region_ids[e.v])};
        if (key.first > key.second) std::swap(key.first, key.second);
        auto it = std::lower_bound(rd.framework.edges.begin(), rd.framework.edges.end(), key);
        rd.edge_to_face[static_cast<std::size_t>(it - rd.framework.edges.begin())] = e.face;
    }
    return rd;
}

RatVec weighting_from_diagram(const DualGraph& dg, const Framework& fw) {
    RatVec out(dg.face_count, Rational(0));
    for (const DualGraphEdge& e : dg.edges) {
        std::size_t u = fw.vertex_index(dg.region_ids[e.u]);
        std::size_t v = fw.vertex_index(dg.region_ids[e.v]);
        std::size_t pivot = e.x.size();
        for (std::size_t j = 0; j < e.x.size() && pivot == e.x.size(); ++j)
            if (e.x[j] != 0) pivot = j;
        if (pivot == e.x.size()) throw TropError("bad-input", "zero perpendicular vector");
        Rational lambda = (fw.positions[u][pivot] - fw.positions[v][pivot]) / Rational(e.x[pivot]);
        for (std::size_t j = 0; j < e.x.size(); ++j)
            if (fw.positions[u][j] - fw.positions[v][j] != lambda * Rational(e.x[j]))
                throw TropError("not-parallel", "edge " + dg.region_ids[e.u] + "-" +
                                                    dg.region_ids[e.v] +
                                                    " is not parallel to its perpendicular vector");
        out[e.face] = lambda;
    }
    return out;
}

DualityReport duality_report(const Curve& c) {
    DualityReport rep;
    rep.certificate = is_extremal(c.complex);
    rep.extremal = rep.certificate.extremal;
    DualGraph dg = dual_graph(c);
    ReciprocalDiagram rd = build_reciprocal(dg, c.lattice_weighting.values);
    rep.direction_rigid = is_direction_rigid(rd.framework);
    rep.inf_rigid = is_infinitesimally_rigid(rd.framework).rigid;
    rep.agree = rep.extremal == rep.direction_rigid && rep.direction_rigid == rep.inf_rigid;
    return rep;
}

}  // namespace trop
