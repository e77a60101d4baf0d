#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trop/balance.hpp"

namespace trop {

// Exact-rational linear programming: min c^T x subject to A x = b, x >= 0.
// Two-phase primal simplex with Bland's rule, which terminates without any
// perturbation machinery and is deterministic for a given input.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    RatVec x;
    Rational objective;
};
LpResult solve_lp(const RatMatrix& a, const RatVec& b, const RatVec& c);

// The cone W(C) of nonnegative balanced weightings, presented by a basis
// of the ambient kernel (all sign-unrestricted balanced weightings).
struct WeightCone {
    std::vector<RatVec> kernel_basis;
    std::size_t dim = 0;
};
WeightCone weight_cone(const BalanceMatrices& bm);

// A vertex of P(C) = {x >= 0 : x^T R = 0, sum x = 1}, or nullopt when the
// polytope is empty. Deterministic: simplex maximizing sum (i+1) x_i.
std::optional<RatVec> find_vertex(const BalanceMatrices& bm);

// Does some strictly positive balanced weighting exist? (LP maximizing the
// minimum coordinate over P(C).)
bool has_positive_weighting(const BalanceMatrices& bm);

// Desk-scale oracle: all vertices of P(C) by enumerating supports and
// checking the active-set system pins a single point. Every candidate
// counts toward `limit`; past it the search throws "limit-exceeded".
std::vector<RatVec> enumerate_vertices_bruteforce(const BalanceMatrices& bm,
                                                  std::uint64_t limit = 1000000);

// Is x a vertex of P(C)? (Membership plus a rank-complete zero set.)
bool is_vertex(const BalanceMatrices& bm, const RatVec& x);

struct Subvariety {
    std::vector<std::size_t> support;  // face indices
    RatVec weighting;                  // the vertex, sum 1
};

// One entry per vertex of P(C); each support induces an extremal
// subcomplex (verified).
std::vector<Subvariety> extremal_subvarieties(const Complex& c, std::uint64_t limit = 1000000);

// A polytope given by its vertex list is a simplex iff the vertices are
// affinely independent.
bool is_simplex(const std::vector<RatVec>& vertices);

}  // namespace trop
