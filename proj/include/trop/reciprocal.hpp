#pragma once

#include <string>
#include <vector>

#include "trop/rigidity.hpp"
#include "trop/tropcurve.hpp"

namespace trop {

// The dual graph of a hypersurface: one vertex per complement region,
// one edge per maximal face, annotated with the primitive perpendicular
// vector x_sigma oriented from the second region into the first.
struct DualGraphEdge {
    std::size_t u = 0, v = 0;  // region indices, u < v
    std::size_t face = 0;      // face index in the complex view
    IntVec x;                  // x_sigma(u, v)
};

struct DualGraph {
    std::vector<std::string> region_ids;  // sorted
    std::vector<DualGraphEdge> edges;
    std::size_t face_count = 0;
};

// For curves the dual graph is the 1-skeleton of the dual subdivision.
// Throws "degenerate-curve" when the subdivision has no 2-cells.
DualGraph dual_graph(const Curve& c);

struct ReciprocalDiagram {
    Framework framework;
    std::vector<std::size_t> edge_to_face;  // framework edge index -> face index
};

// Spanning-tree construction of the reciprocal diagram of a balanced
// weighting: root at the smallest region id placed at the origin, BFS in
// sorted order, every non-tree edge checked to close exactly. A nonzero
// closure residual means the weighting was not balanced.
ReciprocalDiagram build_reciprocal(const DualGraph& dg, const RatVec& weighting);

// Recover the weighting from a diagram: the exact scalar lambda per edge
// with p(u) - p(v) = lambda * x_sigma(u,v). No norms are ever taken.
// Throws "not-parallel" when an edge violates the reciprocal property.
RatVec weighting_from_diagram(const DualGraph& dg, const Framework& fw);

struct DualityReport {
    bool extremal = false;
    bool direction_rigid = false;
    bool inf_rigid = false;
    bool agree = false;
    ExtremalityCertificate certificate;
};

// Extremality of the curve against direction and infinitesimal rigidity
// of its reciprocal diagram; the three verdicts must coincide.
DualityReport duality_report(const Curve& c);

}  // namespace trop
