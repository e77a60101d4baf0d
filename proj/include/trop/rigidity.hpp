#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trop/linalg.hpp"

namespace trop {

// A bar-and-joint framework: a finite simple graph with a rational
// realisation. Vertices are kept in sorted-id order and edges in sorted
// index order, which fixes the rigidity-matrix layout.
struct Framework {
    std::size_t dim = 2;
    std::vector<std::string> vertex_ids;
    std::vector<RatVec> positions;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t vertex_index(const std::string& id) const;
};

Framework make_framework(std::size_t dim, const std::map<std::string, RatVec>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges);

// |E| x d|V|; the row of edge uv carries (p(u)-p(v))^T in the u block and
// the negative in the v block.
RatMatrix rigidity_matrix(const Framework& fw);

std::size_t affine_dimension(const Framework& fw);

struct FlexSpace {
    std::vector<RatVec> kernel;   // ker R(G,p)
    std::vector<RatVec> trivial;  // skew rotations + translations
    std::size_t affine_dim = 0;
};
FlexSpace flex_space(const Framework& fw);

struct RigidityCertificate {
    bool rigid = false;
    std::size_t rank = 0;
    std::size_t required_rank = 0;  // d|V| - binom(d+1,2)
    bool simplex_case = false;
    std::size_t kernel_dim = 0;
    std::size_t trivial_dim = 0;
};
RigidityCertificate is_infinitesimally_rigid(const Framework& fw);

// The space C(G,p) of parallel redrawings: realisations q with every
// q(u)-q(v) parallel to p(u)-p(v). Encoded by d-1 exact orthogonality
// constraints per edge. Throws "coincident-endpoints" when an edge has
// p(u) = p(v).
struct DirectionSpace {
    std::vector<RatVec> basis;
    std::size_t dim = 0;
};
DirectionSpace direction_space(const Framework& fw);

// dim C(G,p) = d+1, plus the one-vertex and zero-affine-dimension cases.
bool is_direction_rigid(const Framework& fw);

// (2,3)-pebble game: does the graph contain a (2,3)-tight spanning
// subgraph (generic rigidity in the plane)? Returns one when found.
struct PebbleResult {
    bool rigid = false;
    std::vector<std::pair<std::size_t, std::size_t>> tight_subgraph;
};
PebbleResult pebble_game_23(std::size_t vertex_count,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Rotate a plane framework 90 degrees clockwise about the origin.
Framework perp(const Framework& fw);

}  // namespace trop
