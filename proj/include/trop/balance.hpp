#pragma once

#include <map>
#include <string>
#include <vector>

#include "trop/complex.hpp"

namespace trop {

enum class WeightKind { TotalPositive, Partial, Unrestricted };

// A rational assignment on the maximal faces, stored in face-index order.
struct Weighting {
    WeightKind kind = WeightKind::Unrestricted;
    RatVec values;
};

// Builds a weighting from face-id keyed values. Faces missing from the map
// get weight 0 (rejected for total-positive weightings). Kind constraints
// are enforced: total-positive means all > 0, partial means all >= 0 with
// at least one zero.
Weighting make_weighting(const Complex& c, const std::map<std::string, Rational>& by_id,
                         WeightKind kind);

// The balance matrices of a complex. Row order is the sorted face-id
// order; column blocks follow the sorted ridge-id order. r = r_tilde * l
// holds exactly, and the left kernel of r is the space of unrestricted
// balanced weightings.
struct BalanceMatrices {
    RatMatrix r_tilde;  // |E| x d|V|
    RatMatrix l;        // d|V| x t|V|
    RatMatrix r;        // |E| x t|V|
    std::vector<std::string> face_order;
    std::vector<std::string> ridge_order;
    std::size_t t = 0;
};

BalanceMatrices build_r(const Complex& c);

struct RidgeResidual {
    std::string ridge_id;
    RatVec components;  // t numbers: the balancing defect in normal coordinates
};

struct BalanceReport {
    bool balanced = false;
    std::vector<RidgeResidual> residuals;
};

BalanceReport is_balanced(const BalanceMatrices& bm, const RatVec& values);
BalanceReport is_balanced(const Complex& c, const Weighting& w);

struct ExtremalityCertificate {
    bool extremal = false;
    std::size_t rank = 0;
    std::size_t num_faces = 0;
    std::vector<RatVec> kernel_basis;
};

// Theorem-level extremality test: rank R(C) = |E| - 1. Requires the input
// to be a tropical variety (some strictly positive balanced weighting);
// throws "not-tropical-variety" otherwise.
ExtremalityCertificate is_extremal(const Complex& c);

// Dimension of the left kernel of R(C).
std::size_t weighting_space_dim(const Complex& c);

// Necessary inequality for extremality: |E| <= (d-k+1)|V| + 1.
bool check_extremal_bound(const Complex& c);

}  // namespace trop
