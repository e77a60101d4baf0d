#pragma once

#include <map>
#include <string>
#include <vector>

#include "trop/linalg.hpp"

namespace trop {

// A pure rational polyhedral complex is presented by witness data: each
// maximal face and ridge carries a relative-interior point and a basis of
// its parallel linear space. Full inequality descriptions are not needed;
// orientation and incidence only require the witnesses.

struct Ridge {
    std::string id;
    RatVec point;
    std::vector<RatVec> basis;  // k-1 vectors spanning L_tau (empty when k = 1)
};

struct MaxFace {
    std::string id;
    RatVec point;
    std::vector<RatVec> basis;  // k vectors spanning L_sigma
    std::vector<std::string> ridge_ids;
};

class Complex {
public:
    Complex(std::size_t ambient_dim, std::size_t dim, std::vector<Ridge> ridges,
            std::vector<MaxFace> faces);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return dim_; }
    // Number of independent normals per ridge, d - k + 1.
    std::size_t t() const { return ambient_dim_ - dim_ + 1; }

    const std::vector<MaxFace>& faces() const { return faces_; }
    const std::vector<Ridge>& ridges() const { return ridges_; }
    std::size_t face_index(const std::string& id) const;
    std::size_t ridge_index(const std::string& id) const;

    const std::vector<std::size_t>& incident_faces(std::size_t ridge) const {
        return ridge_faces_[ridge];
    }
    const std::vector<std::size_t>& incident_ridges(std::size_t face) const {
        return face_ridges_[face];
    }

    // Explicit normal choices (e.g. carried by a fixture). When absent,
    // ridge_normals computes an HNF-canonical basis.
    void set_ridge_normals(std::size_t ridge, std::vector<IntVec> normals);
    const std::vector<IntVec>* normals_override(std::size_t ridge) const;

private:
    std::size_t ambient_dim_, dim_;
    std::vector<Ridge> ridges_;
    std::vector<MaxFace> faces_;
    std::map<std::string, std::size_t> ridge_by_id_, face_by_id_;
    std::vector<std::vector<std::size_t>> ridge_faces_, face_ridges_;
    std::map<std::size_t, std::vector<IntVec>> normal_overrides_;
};

struct ValidationIssue {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

ValidationReport validate(const Complex& c);

// Rows form a basis of span_Q(basis) intersected with Z^d.
IntMatrix saturate_lattice(const std::vector<RatVec>& basis, std::size_t ambient_dim);

// The primitive lattice generator of L_sigma/L_tau oriented into sigma,
// reduced to the canonical coset representative modulo L_tau. Throws
// "degenerate-witness" when the face witness does not leave L_tau.
IntVec z_vector(const Complex& c, std::size_t ridge, std::size_t face);

// t = d-k+1 independent integer vectors orthogonal to L_tau. For point
// ridges (k = 1) this is the standard basis.
std::vector<IntVec> ridge_normals(const Complex& c, std::size_t ridge);

// Subcomplex on the given face indices; ridges incident to none of the
// support faces are dropped. Ids and normal overrides are preserved.
Complex induced_subcomplex(const Complex& c, const std::vector<std::size_t>& support);

}  // namespace trop
