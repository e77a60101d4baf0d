#include "trop/rigidity.hpp"

#include <algorithm>
#include <deque>

namespace trop {

std::size_t Framework::vertex_index(const std::string& id) const {
    auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), id);
    if (it == vertex_ids.end() || *it != id) throw TropError("unknown-vertex", "'" + id + "'");
    return static_cast<std::size_t>(it - vertex_ids.begin());
}

Framework make_framework(std::size_t dim, const std::map<std::string, RatVec>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
    Framework fw;
    fw.dim = dim;
    for (const auto& [id, p] : vertices) {
        if (p.size() != dim) throw TropError("bad-dimension", "vertex '" + id + "'");
        fw.vertex_ids.push_back(id);
        fw.positions.push_back(p);
    }
    for (const auto& [a, b] : edges) {
        std::size_t u = fw.vertex_index(a), v = fw.vertex_index(b);
        if (u == v) throw TropError("bad-edge", "loop at '" + a + "'");
        fw.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(fw.edges.begin(), fw.edges.end());
    auto last = std::unique(fw.edges.begin(), fw.edges.end());
    if (last != fw.edges.end()) throw TropError("bad-edge", "parallel edges are not allowed");
    return fw;
}

RatMatrix rigidity_matrix(const Framework& fw) {
    const std::size_t d = fw.dim;
    RatMatrix r(fw.edges.size(), d * fw.positions.size());
    for (std::size_t e = 0; e < fw.edges.size(); ++e) {
        auto [u, v] = fw.edges[e];
        for (std::size_t j = 0; j < d; ++j) {
            Rational diff = fw.positions[u][j] - fw.positions[v][j];
            r(e, d * u + j) = diff;
            r(e, d * v + j) = -diff;
        }
    }
    return r;
}

std::size_t affine_dimension(const Framework& fw) {
    if (fw.positions.size() <= 1) return 0;
    RatMatrix diffs(fw.positions.size() - 1, fw.dim);
    for (std::size_t i = 1; i < fw.positions.size(); ++i)
        for (std::size_t j = 0; j < fw.dim; ++j)
            diffs(i - 1, j) = fw.positions[i][j] - fw.positions[0][j];
    return rank(diffs);
}

FlexSpace flex_space(const Framework& fw) {
    const std::size_t d = fw.dim, nv = fw.positions.size();
    FlexSpace fs;
    fs.affine_dim = affine_dimension(fw);
    fs.kernel = kernel_basis(rigidity_matrix(fw));

    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < d; ++i) {  // translations
        RatVec t(d * nv, Rational(0));
        for (std::size_t v = 0; v < nv; ++v) t[d * v + i] = 1;
        gens.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < d; ++i)  // skew rotations
        for (std::size_t j = i + 1; j < d; ++j) {
            RatVec r(d * nv, Rational(0));
            for (std::size_t v = 0; v < nv; ++v) {
                r[d * v + i] = fw.positions[v][j];
                r[d * v + j] = -fw.positions[v][i];
            }
            gens.push_back(std::move(r));
        }
    Rref rr = rref(rows_to_matrix(gens, d * nv));
    for (std::size_t i = 0; i < rr.rank; ++i) fs.trivial.push_back(rr.m.row(i));
    return fs;
}

RigidityCertificate is_infinitesimally_rigid(const Framework& fw) {
    const std::size_t d = fw.dim, nv = fw.positions.size();
    RigidityCertificate cert;
    std::size_t adim = affine_dimension(fw);
    cert.required_rank = d * nv - (d + 1) * d / 2;
    cert.simplex_case =
        fw.edges.size() == nv * (nv - 1) / 2 && nv <= d + 1 && adim + 1 == nv;
    cert.rank = rank(rigidity_matrix(fw));
    cert.kernel_dim = d * nv - cert.rank;
    FlexSpace fs = flex_space(fw);
    cert.trivial_dim = fs.trivial.size();
    cert.rigid = cert.simplex_case || cert.rank == cert.required_rank;
    return cert;
}

DirectionSpace direction_space(const Framework& fw) {
    const std::size_t d = fw.dim, nv = fw.positions.size();
    std::vector<RatVec> rows;
    for (auto [u, v] : fw.edges) {
        RatVec dir(d);
        bool zero = true;
        for (std::size_t j = 0; j < d; ++j) {
            dir[j] = fw.positions[u][j] - fw.positions[v][j];
            zero = zero && dir[j] == 0;
        }
        if (zero)
            throw TropError("coincident-endpoints",
                            "edge " + fw.vertex_ids[u] + "-" + fw.vertex_ids[v]);
        IntMatrix dm(1, d);
        IntVec cleared = clear_denominators(dir);
        for (std::size_t j = 0; j < d; ++j) dm(0, j) = cleared[j];
        IntMatrix normals = integer_kernel(dm);  // d-1 rows
        for (std::size_t i = 0; i < normals.rows(); ++i) {
            RatVec row(d * nv, Rational(0));
            for (std::size_t j = 0; j < d; ++j) {
                row[d * u + j] = Rational(normals(i, j));
                row[d * v + j] = Rational(-normals(i, j));
            }
            rows.push_back(std::move(row));
        }
    }
    DirectionSpace ds;
    ds.basis = kernel_basis(rows_to_matrix(rows, d * nv));
    ds.dim = ds.basis.size();
    return ds;
}

bool is_direction_rigid(const Framework& fw) {
    if (fw.positions.size() == 1) return true;
    if (affine_dimension(fw) == 0) return false;
    return direction_space(fw).dim == fw.dim + 1;
}

namespace {

// Search for a free pebble reachable from `start` along directed edges,
// never visiting the excluded endpoints; reverses the path and moves the
// pebble back on success.
bool collect_pebble(std::size_t start, std::size_t excl_a, std::size_t excl_b,
                    std::vector<int>& pebbles, std::vector<std::vector<std::size_t>>& out) {
    const std::size_t n = pebbles.size();
    std::vector<std::size_t> parent(n, n);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    std::size_t found = n;
    while (!queue.empty() && found == n) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t y : out[x]) {
            if (seen[y] || y == excl_a || y == excl_b) continue;
            seen[y] = true;
            parent[y] = x;
            if (pebbles[y] > 0) {
                found = y;
                break;
            }
            queue.push_back(y);
        }
    }
    if (found == n) return false;
    --pebbles[found];
    ++pebbles[start];
    for (std::size_t y = found; y != start;) {
        std::size_t x = parent[y];
        out[x].erase(std::find(out[x].begin(), out[x].end(), y));
        out[y].push_back(x);
        y = x;
    }
    return true;
}

}  // namespace

PebbleResult pebble_game_23(std::size_t vertex_count,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    PebbleResult res;
    if (vertex_count == 0) return res;
    if (vertex_count == 1) {
        res.rigid = true;
        return res;
    }
    std::vector<int> pebbles(vertex_count, 2);
    std::vector<std::vector<std::size_t>> out(vertex_count);
    std::vector<std::pair<std::size_t, std::size_t>> accepted;
    for (auto [u, v] : edges) {
        if (u == v) continue;
        while (pebbles[u] + pebbles[v] < 4) {
            if (!collect_pebble(u, u, v, pebbles, out) &&
                !collect_pebble(v, u, v, pebbles, out))
                break;
        }
        if (pebbles[u] + pebbles[v] < 4) continue;  // redundant edge
        --pebbles[u];
        out[u].push_back(v);
        accepted.emplace_back(u, v);
    }
    res.rigid = accepted.size() == 2 * vertex_count - 3;
    if (res.rigid) {
        for (auto& [u, v] : accepted)
            if (u > v) std::swap(u, v);
        std::sort(accepted.begin(), accepted.end());
        res.tight_subgraph = std::move(accepted);
    }
    return res;
}

Framework perp(const Framework& fw) {
    if (fw.dim != 2) throw TropError("bad-dimension", "perp needs a plane framework");
    Framework out = fw;
    for (RatVec& p : out.positions) {
        Rational x = p[0];
        p[0] = p[1];
        p[1] = -x;
    }
    return out;
}

}  // namespace trop
