#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trop/cone.hpp"

namespace trop {

struct DecompositionPart {
    std::vector<std::size_t> support;  // face indices
    RatVec weighting;                  // vertex of P(C), coordinates sum to 1
    ExtremalityCertificate certificate;
};

struct Decomposition {
    std::vector<DecompositionPart> parts;
    bool unique = false;          // P(C) is a simplex
    std::size_t bound_m = 0;      // |E| - rank R(C)
    RatVec covering_combination;  // uniform combination of the parts; strictly positive
};

// Extremal decomposition via the vertex walk: start from one vertex of
// P(C), repeatedly walk along an edge that makes some still-uncovered
// coordinate positive, then reduce the collected vertex set against the
// enumerated vertices of P(C). force_oracle skips the walk and covers the
// faces greedily from the enumerated vertices instead (also the fallback
// when the walk gets stuck). Throws "not-tropical-variety" when no
// strictly positive balanced weighting exists.
Decomposition decompose(const Complex& c, std::uint64_t limit = 1000000,
                        bool force_oracle = false);

// m = |E| - rank R(C): some decomposition into m pairwise distinct
// extremal parts always exists.
std::size_t decomposition_upper_bound(const Complex& c);

// All vertices of P(C) when the polytope is a simplex (the decomposition
// is then unique), absent otherwise.
std::optional<Decomposition> unique_decomposition(const Complex& c, std::uint64_t limit = 1000000);

// Are the given (support, weighting) pairs vertices of P(C) whose uniform
// combination is strictly positive on every face?
bool verify_decomposition(const Complex& c,
                          const std::vector<std::pair<std::vector<std::size_t>, RatVec>>& parts);

}  // namespace trop
