#include "trop/tropcurve.hpp"

#include <algorithm>
#include <set>

#include "trop/rigidity.hpp"

namespace trop {

namespace {

const std::string kUnicodeMinus = "\xe2\x88\x92";

class PolyParser {
public:
    explicit PolyParser(std::string_view text) {
        for (std::size_t i = 0; i < text.size();) {
            if (text.substr(i, 3) == kUnicodeMinus) {
                s_ += '-';
                i += 3;
            } else {
                s_ += text[i++];
            }
        }
    }

    TropicalPolynomial parse() {
        TropicalPolynomial f;
        add_term(f);
        skip_ws();
        while (!done()) {
            expect('+');
            add_term(f);
            skip_ws();
        }
        return f;
    }

private:
    void skip_ws() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
    }
    bool done() const { return i_ >= s_.size(); }
    char peek() {
        skip_ws();
        return done() ? '\0' : s_[i_];
    }
    void expect(char c) {
        if (peek() != c)
            throw TropError("parse-error", "expected '" + std::string(1, c) + "' at offset " +
                                               std::to_string(i_));
        ++i_;
    }

    std::string scan_number(bool allow_sign) {
        skip_ws();
        std::size_t start = i_;
        if (allow_sign && i_ < s_.size() && s_[i_] == '-') ++i_;
        std::size_t digits = i_;
        while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '/'))
            ++i_;
        if (i_ == digits) throw TropError("parse-error", "expected number at offset " +
                                                             std::to_string(start));
        return s_.substr(start, i_ - start);
    }

    long scan_exponent() {
        std::string text = scan_number(true);
        if (text.find('/') != std::string::npos)
            throw TropError("parse-error", "exponent must be an integer");
        try {
            long k = std::stol(text);
            if (k > 1000000 || k < -1000000)
                throw TropError("parse-error", "exponent out of range");
            return k;
        } catch (const std::logic_error&) {
            throw TropError("parse-error", "exponent out of range");
        }
    }

    void add_term(TropicalPolynomial& f) {
        bool any = false;
        Rational coeff = 0;
        char c = peek();
        if (c == '(') {
            ++i_;
            coeff = parse_rational(scan_number(true));
            expect(')');
            any = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = parse_rational(scan_number(false));
            any = true;
        }
        Exponent k{0, 0};
        if (peek() == 'x') {
            ++i_;
            k[0] = 1;
            if (peek() == '^') {
                ++i_;
                k[0] = scan_exponent();
            }
            any = true;
        }
        if (peek() == 'y') {
            ++i_;
            k[1] = 1;
            if (peek() == '^') {
                ++i_;
                k[1] = scan_exponent();
            }
            any = true;
        }
        if (!any)
            throw TropError("parse-error", "expected a term at offset " + std::to_string(i_));
        auto [it, inserted] = f.terms.emplace(k, coeff);
        if (!inserted) it->second = std::max(it->second, coeff);
    }

    std::string s_;
    std::size_t i_ = 0;
};

long cross(const Exponent& o, const Exponent& a, const Exponent& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Strictly convex CCW hull (collinear points dropped) via monotone chain.
std::vector<Exponent> convex_hull(std::vector<Exponent> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Exponent> h(2 * pts.size());
    std::size_t k = 0;
    for (const Exponent& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && cross(h[k - 2], h[k - 1], *it) <= 0) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    return h;
}

bool collinear_support(const std::vector<Exponent>& pts) {
    for (std::size_t i = 2; i < pts.size(); ++i)
        if (cross(pts[0], pts[1], pts[i]) != 0) return false;
    return true;
}

long lattice_length(const Exponent& a, const Exponent& b) {
    Int g = boost::multiprecision::gcd(Int(std::abs(a[0] - b[0])), Int(std::abs(a[1] - b[1])));
    return static_cast<long>(g);
}

bool point_on_segment(const Exponent& p, const Exponent& a, const Exponent& b) {
    if (cross(a, b, p) != 0) return false;
    long lo0 = std::min(a[0], b[0]), hi0 = std::max(a[0], b[0]);
    long lo1 = std::min(a[1], b[1]), hi1 = std::max(a[1], b[1]);
    return p[0] >= lo0 && p[0] <= hi0 && p[1] >= lo1 && p[1] <= hi1;
}

DualSubdivision degenerate_subdivision(const TropicalPolynomial& f) {
    DualSubdivision sd;
    sd.degenerate = true;
    std::vector<Exponent> pts;
    for (const auto& [k, a] : f.terms) pts.push_back(k);
    sd.newton_polytope = convex_hull(pts);
    if (pts.size() < 2) return sd;  // a monomial: nothing ties anywhere

    Exponent base = *std::min_element(pts.begin(), pts.end());
    Exponent far = *std::max_element(pts.begin(), pts.end());
    IntVec dir = primitive_vector({Int(far[0] - base[0]), Int(far[1] - base[1])});
    long d0 = static_cast<long>(dir[0]), d1 = static_cast<long>(dir[1]);

    // Parametrize the support along the line and take the 1-dimensional
    // lower hull of (position, -coefficient).
    struct Lifted {
        long s;
        Rational lift;
        Exponent k;
    };
    std::vector<Lifted> lifted;
    for (const auto& [k, a] : f.terms) {
        long s = d0 != 0 ? (k[0] - base[0]) / d0 : (k[1] - base[1]) / d1;
        lifted.push_back({s, -a, k});
    }
    std::sort(lifted.begin(), lifted.end(), [](const Lifted& a, const Lifted& b) {
        return a.s < b.s;
    });
    std::vector<Lifted> hull;
    for (const Lifted& p : lifted) {
        while (hull.size() >= 2) {
            const Lifted& a = hull[hull.size() - 2];
            const Lifted& b = hull[hull.size() - 1];
            // Drop b unless it lies strictly below segment a..p.
            if ((b.lift - a.lift) * Rational(p.s - a.s) < (p.lift - a.lift) * Rational(b.s - a.s))
                break;
            hull.pop_back();
        }
        hull.push_back(p);
    }
    for (const Lifted& h : hull) sd.points.push_back(h.k);
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        SdEdge e;
        e.a = std::min(hull[i].k, hull[i + 1].k);
        e.b = std::max(hull[i].k, hull[i + 1].k);
        e.lattice_length = lattice_length(e.a, e.b);
        e.boundary = true;
        sd.edges.push_back(e);
    }
    return sd;
}

}  // namespace

TropicalPolynomial parse_polynomial(std::string_view text) {
    return PolyParser(text).parse();
}

std::string format_polynomial(const TropicalPolynomial& f) {
    std::string out;
    for (const auto& [k, a] : f.terms) {
        if (!out.empty()) out += " + ";
        std::string coeff;
        if (a != 0 || (k[0] == 0 && k[1] == 0)) {
            coeff = format_rational(a);
            if (a < 0) coeff = "(" + coeff + ")";
        }
        std::string mono;
        if (k[0] != 0) mono += k[0] == 1 ? "x" : "x^" + std::to_string(k[0]);
        if (k[1] != 0) {
            if (!mono.empty()) mono += " ";
            mono += k[1] == 1 ? "y" : "y^" + std::to_string(k[1]);
        }
        out += coeff;
        if (!coeff.empty() && !mono.empty()) out += " ";
        out += mono;
    }
    return out;
}

EvalResult eval(const TropicalPolynomial& f, const std::array<Rational, 2>& z) {
    EvalResult res;
    bool first = true;
    for (const auto& [k, a] : f.terms) {
        Rational v = Rational(k[0]) * z[0] + Rational(k[1]) * z[1] + a;
        if (first || v > res.value) {
            res.value = v;
            res.argmax.clear();
            first = false;
        }
        if (v == res.value) res.argmax.push_back(k);
    }
    return res;
}

DualSubdivision dual_subdivision(const TropicalPolynomial& f) {
    if (f.terms.empty()) throw TropError("parse-error", "polynomial has no terms");
    std::vector<Exponent> pts;
    for (const auto& [k, a] : f.terms) pts.push_back(k);
    if (collinear_support(pts)) return degenerate_subdivision(f);

    DualSubdivision sd;
    sd.newton_polytope = convex_hull(pts);

    // Every 2-cell is the argmax set at its dual point, and any such cell
    // contains a non-collinear triple of support points; solving the tie
    // system of each triple and keeping global maxima finds all cells.
    std::set<std::array<Rational, 2>> seen;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t l = j + 1; l < pts.size(); ++l) {
                if (cross(pts[i], pts[j], pts[l]) == 0) continue;
                RatMatrix m(2, 2);
                m(0, 0) = pts[j][0] - pts[i][0];
                m(0, 1) = pts[j][1] - pts[i][1];
                m(1, 0) = pts[l][0] - pts[i][0];
                m(1, 1) = pts[l][1] - pts[i][1];
                RatVec rhs{f.terms.at(pts[i]) - f.terms.at(pts[j]),
                           f.terms.at(pts[i]) - f.terms.at(pts[l])};
                auto z = solve(m, rhs);
                if (!z) continue;
                std::array<Rational, 2> zz{(*z)[0], (*z)[1]};
                if (seen.count(zz)) continue;
                EvalResult ev = eval(f, zz);
                Rational vi =
                    Rational(pts[i][0]) * zz[0] + Rational(pts[i][1]) * zz[1] + f.terms.at(pts[i]);
                if (vi != ev.value) continue;  // the triple is dominated elsewhere
                seen.insert(zz);
                SdCell cell;
                cell.dual_point = zz;
                cell.polygon = convex_hull(ev.argmax);
                sd.cells.push_back(std::move(cell));
            }
    std::sort(sd.cells.begin(), sd.cells.end(),
              [](const SdCell& a, const SdCell& b) { return a.dual_point < b.dual_point; });

    std::set<Exponent> corner_set;
    for (const SdCell& c : sd.cells)
        for (const Exponent& p : c.polygon) corner_set.insert(p);
    sd.points.assign(corner_set.begin(), corner_set.end());

    std::map<std::pair<Exponent, Exponent>, std::vector<std::size_t>> edge_cells;
    for (std::size_t ci = 0; ci < sd.cells.size(); ++ci) {
        const auto& poly = sd.cells[ci].polygon;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            Exponent a = poly[i], b = poly[(i + 1) % poly.size()];
            edge_cells[{std::min(a, b), std::max(a, b)}].push_back(ci);
        }
    }
    for (const auto& [key, cells] : edge_cells) {
        SdEdge e;
        e.a = key.first;
        e.b = key.second;
        e.cells = cells;
        e.lattice_length = lattice_length(e.a, e.b);
        e.boundary = cells.size() == 1;
        if (cells.size() > 2)
            throw TropError("internal-inconsistency", "subdivision edge in three cells");
        if (e.boundary) {
            bool found = false;
            const auto& np = sd.newton_polytope;
            for (std::size_t i = 0; i < np.size() && !found; ++i) {
                Exponent u = np[i], v = np[(i + 1) % np.size()];
                if (!point_on_segment(e.a, u, v) || !point_on_segment(e.b, u, v)) continue;
                // CCW hull: the outward normal of edge u->v is it rotated
                // clockwise.
                IntVec n = primitive_vector({Int(v[1] - u[1]), Int(u[0] - v[0])});
                e.outer_normal = {static_cast<long>(n[0]), static_cast<long>(n[1])};
                found = true;
            }
            if (!found)
                throw TropError("internal-inconsistency", "boundary edge off the Newton polytope");
        }
        sd.edges.push_back(std::move(e));
    }
    return sd;
}

namespace {

std::string padded_id(char prefix, std::size_t i, std::size_t count) {
    std::size_t width = count > 100 ? 3 : 2;
    std::string digits = std::to_string(i);
    while (digits.size() < width) digits.insert(digits.begin(), '0');
    return prefix + digits;
}

}  // namespace

Curve build_curve(const TropicalPolynomial& f) {
    Curve curve;
    curve.sd = dual_subdivision(f);
    const DualSubdivision& sd = curve.sd;
    if (sd.degenerate && sd.edges.empty())
        throw TropError("empty-variety", "a tropical monomial is differentiable everywhere");

    if (sd.degenerate) {
        for (std::size_t i = 0; i < sd.edges.size(); ++i) {
            const SdEdge& se = sd.edges[i];
            CurveEdge e;
            e.kind = CurveEdgeKind::Line;
            e.sd_edge = i;
            e.weight = se.lattice_length;
            RatMatrix m(1, 2);
            m(0, 0) = se.b[0] - se.a[0];
            m(0, 1) = se.b[1] - se.a[1];
            auto w = solve(m, {f.terms.at(se.a) - f.terms.at(se.b)});
            if (!w) throw TropError("internal-inconsistency", "line witness");
            e.witness = {(*w)[0], (*w)[1]};
            IntVec d = primitive_vector({Int(-(se.b[1] - se.a[1])), Int(se.b[0] - se.a[0])});
            std::size_t first_nonzero = d[0] != 0 ? 0 : 1;
            if (d[first_nonzero] < 0)
                for (Int& x : d) x = -x;
            e.direction = d;
            curve.edges.push_back(std::move(e));
        }
    } else {
        for (const SdCell& c : sd.cells) curve.vertices.push_back(c.dual_point);
        // Cells are sorted by dual point, so cell index == vertex index.
        for (std::size_t i = 0; i < sd.edges.size(); ++i) {
            const SdEdge& se = sd.edges[i];
            CurveEdge e;
            e.sd_edge = i;
            e.weight = se.lattice_length;
            if (se.boundary) {
                e.kind = CurveEdgeKind::Ray;
                e.v0 = se.cells[0];
                e.direction = {Int(se.outer_normal[0]), Int(se.outer_normal[1])};
                e.witness = {curve.vertices[e.v0][0] + Rational(e.direction[0]),
                             curve.vertices[e.v0][1] + Rational(e.direction[1])};
            } else {
                e.kind = CurveEdgeKind::Segment;
                e.v0 = std::min(se.cells[0], se.cells[1]);
                e.v1 = std::max(se.cells[0], se.cells[1]);
                RatVec diff{curve.vertices[e.v1][0] - curve.vertices[e.v0][0],
                            curve.vertices[e.v1][1] - curve.vertices[e.v0][1]};
                e.direction = primitive_vector(clear_denominators(diff));
                e.witness = {(curve.vertices[e.v0][0] + curve.vertices[e.v1][0]) / 2,
                             (curve.vertices[e.v0][1] + curve.vertices[e.v1][1]) / 2};
            }
            // Duality: the curve edge is perpendicular to its subdivision
            // edge.
            Int perp_check = e.direction[0] * Int(se.b[0] - se.a[0]) +
                             e.direction[1] * Int(se.b[1] - se.a[1]);
            if (perp_check != 0)
                throw TropError("internal-inconsistency", "curve edge not perpendicular to dual");
            curve.edges.push_back(std::move(e));
        }
        auto order = [](const CurveEdge& a, const CurveEdge& b) {
            auto key = [](const CurveEdge& e) {
                return std::tuple(e.kind == CurveEdgeKind::Ray, e.v0,
                                  e.kind == CurveEdgeKind::Ray ? 0 : static_cast<long>(e.v1),
                                  e.direction[0], e.direction[1]);
            };
            return key(a) < key(b);
        };
        std::sort(curve.edges.begin(), curve.edges.end(), order);
    }

    // Complex view: ridges are the curve vertices, faces the edges.
    std::vector<Ridge> ridges;
    for (std::size_t v = 0; v < curve.vertices.size(); ++v)
        ridges.push_back({padded_id('v', v, curve.vertices.size()),
                          {curve.vertices[v][0], curve.vertices[v][1]},
                          {}});
    std::vector<MaxFace> faces;
    std::map<std::string, Rational> weights;
    for (std::size_t i = 0; i < curve.edges.size(); ++i) {
        CurveEdge& e = curve.edges[i];
        e.face_id = padded_id('e', i, curve.edges.size());
        MaxFace face;
        face.id = e.face_id;
        face.point = {e.witness[0], e.witness[1]};
        face.basis = {to_rational(e.direction)};
        if (e.kind == CurveEdgeKind::Segment)
            face.ridge_ids = {ridges[e.v0].id, ridges[e.v1].id};
        else if (e.kind == CurveEdgeKind::Ray)
            face.ridge_ids = {ridges[e.v0].id};
        faces.push_back(std::move(face));
        weights[e.face_id] = Rational(e.weight);
    }
    curve.complex = Complex(2, 1, std::move(ridges), std::move(faces));
    curve.lattice_weighting = make_weighting(curve.complex, weights, WeightKind::TotalPositive);
    return curve;
}

StructureReport structure_report(const Curve& c) {
    StructureReport rep;
    const std::size_t nv = c.vertices.size();
    rep.degree_sequence.assign(nv, 0);
    for (std::size_t v = 0; v < nv; ++v)
        rep.degree_sequence[v] = c.complex.incident_faces(v).size();
    std::size_t trivalent = 0;
    for (std::size_t d : rep.degree_sequence)
        if (d == 3) ++trivalent;
    rep.has_trivalent_vertex = trivalent > 0;
    rep.missing_trivalent_vertex = nv > 0 && trivalent == 0;

    std::vector<std::size_t> rays;
    for (std::size_t i = 0; i < c.edges.size(); ++i)
        if (c.edges[i].kind == CurveEdgeKind::Ray) rays.push_back(i);
    rep.half_edge_count = rays.size();

    if (trivalent == 1) {
        bool others_deg4 = true;
        for (std::size_t d : rep.degree_sequence)
            if (d != 3 && d != 4) others_deg4 = false;
        rep.single_trivalent_shape_violated = !others_deg4 || rays.size() != 3;
    }

    // Region data from the subdivision: region = 0-cell, its side count =
    // number of incident subdivision edges.
    std::map<Exponent, std::size_t> region_index;
    for (std::size_t i = 0; i < c.sd.points.size(); ++i) region_index[c.sd.points[i]] = i;
    std::vector<std::size_t> region_degree(c.sd.points.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> dual_edges;
    for (const SdEdge& e : c.sd.edges) {
        std::size_t u = region_index.at(e.a), v = region_index.at(e.b);
        ++region_degree[u];
        ++region_degree[v];
        dual_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (region_degree.size() >= 7) {
        bool all_small = true;
        for (std::size_t d : region_degree) all_small = all_small && d <= 3;
        rep.small_faces_obstruction = all_small;
    }

    // Two rays meeting at a curve vertex share a region exactly when their
    // dual edges share an endpoint.
    for (std::size_t a = 0; a < rays.size() && !rep.separated_half_edge_pair; ++a)
        for (std::size_t b = a + 1; b < rays.size(); ++b) {
            const CurveEdge& ea = c.edges[rays[a]];
            const CurveEdge& eb = c.edges[rays[b]];
            if (ea.v0 != eb.v0) continue;
            const SdEdge& sa = c.sd.edges[ea.sd_edge];
            const SdEdge& sb = c.sd.edges[eb.sd_edge];
            bool share = sa.a == sb.a || sa.a == sb.b || sa.b == sb.a || sa.b == sb.b;
            if (!share) {
                rep.separated_half_edge_pair = true;
                break;
            }
        }

    rep.dual_graph_rigid = pebble_game_23(c.sd.points.size(), dual_edges).rigid;

    rep.necessary_conditions_pass = !rep.missing_trivalent_vertex &&
                                    !rep.single_trivalent_shape_violated &&
                                    !rep.small_faces_obstruction &&
                                    !rep.separated_half_edge_pair && rep.dual_graph_rigid;
    return rep;
}

}  // namespace trop
