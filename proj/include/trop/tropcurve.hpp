#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "trop/balance.hpp"

namespace trop {

using Exponent = std::array<long, 2>;

// Max-plus polynomial in two variables. Duplicate exponents combine by
// max, which is tropical addition.
struct TropicalPolynomial {
    std::map<Exponent, Rational> terms;
};

// Grammar: expression := term ("+" term)*; term := coeff? monomial? with
// at least one present; coeff := "(" rational ")" | bare nonnegative
// rational; monomial := ("x" ("^" integer)?)? ("y" ("^" integer)?)?.
// "+" is max, juxtaposition adds. U+2212 and '-' both work as minus.
TropicalPolynomial parse_polynomial(std::string_view text);

std::string format_polynomial(const TropicalPolynomial& f);

struct EvalResult {
    Rational value;
    std::vector<Exponent> argmax;
};
EvalResult eval(const TropicalPolynomial& f, const std::array<Rational, 2>& z);

struct SdCell {
    std::vector<Exponent> polygon;       // CCW vertex list
    std::array<Rational, 2> dual_point;  // where all the cell's terms tie
};

struct SdEdge {
    Exponent a, b;  // endpoints with a < b lexicographically
    long lattice_length = 1;
    std::vector<std::size_t> cells;  // adjacent cells: 2 interior, 1 boundary
    bool boundary = false;
    std::array<long, 2> outer_normal{0, 0};  // primitive; boundary edges only
};

// The regular subdivision of the Newton polytope induced by the lifted
// support. Cells are the projected lower facets with coplanar lifts
// merged; a collinear support yields the degenerate one-dimensional case.
struct DualSubdivision {
    bool degenerate = false;
    std::vector<Exponent> points;  // 0-cells (support points that are cell corners)
    std::vector<SdCell> cells;
    std::vector<SdEdge> edges;
    std::vector<Exponent> newton_polytope;  // CCW hull
};

DualSubdivision dual_subdivision(const TropicalPolynomial& f);

enum class CurveEdgeKind { Segment, Ray, Line };

struct CurveEdge {
    CurveEdgeKind kind = CurveEdgeKind::Segment;
    std::size_t v0 = 0, v1 = 0;  // vertex ids; rays use v0 only, lines neither
    std::array<Rational, 2> witness;
    IntVec direction;  // primitive; rays point outward
    long weight = 1;
    std::size_t sd_edge = 0;
    std::string face_id;
};

// The plane tropical curve of a polynomial together with its complex view
// (dimension 1 in the plane) and the lattice-length weighting.
struct Curve {
    std::vector<std::array<Rational, 2>> vertices;  // sorted lexicographically
    std::vector<CurveEdge> edges;
    DualSubdivision sd;
    Complex complex{2, 1, {}, {}};
    Weighting lattice_weighting;
};

// Throws "empty-variety" for monomials (nowhere non-differentiable).
Curve build_curve(const TropicalPolynomial& f);

// Necessary-condition report for extremality of a plane curve; any failed
// condition settles non-extremality without a rank computation.
struct StructureReport {
    std::vector<std::size_t> degree_sequence;  // per curve vertex
    std::size_t half_edge_count = 0;
    bool has_trivalent_vertex = false;
    bool missing_trivalent_vertex = false;     // vertices exist but none trivalent
    bool single_trivalent_shape_violated = false;
    bool small_faces_obstruction = false;      // >= 7 regions, all with <= 3 sides
    bool separated_half_edge_pair = false;     // rays sharing a vertex but no region
    bool dual_graph_rigid = false;
    bool necessary_conditions_pass = false;
};

StructureReport structure_report(const Curve& c);

}  // namespace trop
