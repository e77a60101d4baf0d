#include "trop/decompose.hpp"

#include <algorithm>
#include <set>

namespace trop {

namespace {

std::vector<std::size_t> support_of(const RatVec& v) {
    std::vector<std::size_t> s;
    for (std::size_t e = 0; e < v.size(); ++e)
        if (v[e] != 0) s.push_back(e);
    return s;
}

bool covers_all(const std::vector<RatVec>& vecs, std::size_t n) {
    std::vector<bool> hit(n, false);
    for (const RatVec& v : vecs)
        for (std::size_t e = 0; e < n; ++e)
            if (v[e] != 0) hit[e] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// Subsets of `ground` of the given size in lexicographic order, listed
// with the ones avoiding `avoid` first.
std::vector<std::vector<std::size_t>> ordered_subsets(const std::vector<std::size_t>& ground,
                                                      std::size_t size, std::size_t avoid) {
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == size) {
            all.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < ground.size(); ++i) {
            cur.push_back(ground[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<std::vector<std::size_t>> ordered;
    for (const auto& s : all)
        if (std::find(s.begin(), s.end(), avoid) == s.end()) ordered.push_back(s);
    for (const auto& s : all)
        if (std::find(s.begin(), s.end(), avoid) != s.end()) ordered.push_back(s);
    return ordered;
}

bool parallel(const RatVec& a, const RatVec& b) {
    return rank(rows_to_matrix({a, b}, a.size())) <= 1;
}

struct WalkState {
    std::vector<RatVec> vertices;  // in discovery order, starting vertex first
    bool stuck = false;
};

WalkState edge_walk(const BalanceMatrices& bm, const RatVec& start, std::size_t kernel_dim) {
    const std::size_t n = bm.r.rows();
    WalkState st;
    st.vertices.push_back(start);

    // All work happens inside the kernel of R(C)^T: a weighting vanishing
    // on J corresponds to a coefficient vector annihilating the J columns
    // of the kernel basis, which keeps every per-J test tiny.
    std::vector<RatVec> kb = left_kernel_basis(bm.r);
    RatMatrix kmat = rows_to_matrix(kb, n);

    std::vector<std::size_t> i_set = support_of(start);  // complement gives zeros
    {
        std::vector<std::size_t> zeros;
        std::size_t pos = 0;
        for (std::size_t e = 0; e < n; ++e) {
            if (pos < i_set.size() && i_set[pos] == e)
                ++pos;
            else
                zeros.push_back(e);
        }
        i_set = zeros;
    }
    std::set<std::size_t> uncovered(i_set.begin(), i_set.end());

    while (!uncovered.empty()) {
        bool advanced = false;
        auto subsets = ordered_subsets(i_set, kernel_dim - 2, *uncovered.begin());
        for (const auto& j_set : subsets) {
            // J must leave something of I' to cover.
            bool leaves = false;
            for (std::size_t e : uncovered)
                if (std::find(j_set.begin(), j_set.end(), e) == j_set.end()) leaves = true;
            if (!leaves) continue;

            RatMatrix cols(kernel_dim, j_set.size());
            for (std::size_t i = 0; i < kernel_dim; ++i)
                for (std::size_t k = 0; k < j_set.size(); ++k) cols(i, k) = kmat(i, j_set[k]);
            auto coeffs = left_kernel_basis(cols);
            if (coeffs.size() != 2) continue;  // walk only the clean nullity-2 case

            std::vector<RatVec> basis;
            for (const RatVec& alpha : coeffs) {
                RatVec w(n, Rational(0));
                for (std::size_t i = 0; i < kernel_dim; ++i) {
                    if (alpha[i] == 0) continue;
                    for (std::size_t e = 0; e < n; ++e) w[e] += alpha[i] * kmat(i, e);
                }
                basis.push_back(std::move(w));
            }
            RatVec dir = parallel(basis[0], start) ? basis[1] : basis[0];
            if (parallel(dir, start)) continue;

            for (int sign = 0; sign < 2; ++sign) {
                RatVec cand(n);
                Rational sum = 0;
                for (std::size_t e = 0; e < n; ++e) {
                    cand[e] = sign ? Rational(-dir[e]) : dir[e];
                    sum += cand[e];
                }
                // Keep the walk inside the sum-1 hyperplane.
                for (std::size_t e = 0; e < n; ++e) cand[e] -= sum * start[e];

                bool ok = true;
                for (std::size_t e : i_set) ok = ok && cand[e] >= 0;
                if (ok) {
                    ok = false;
                    for (std::size_t e : uncovered)
                        if (std::find(j_set.begin(), j_set.end(), e) == j_set.end() && cand[e] > 0)
                            ok = true;
                }
                if (!ok) continue;

                // Largest t with start + t*cand still nonnegative.
                bool bounded = false;
                Rational t;
                for (std::size_t e = 0; e < n; ++e) {
                    if (cand[e] >= 0) continue;
                    Rational lim = start[e] / -cand[e];
                    if (!bounded || lim < t) t = lim;
                    bounded = true;
                }
                if (!bounded || t <= 0) continue;

                RatVec next(n);
                for (std::size_t e = 0; e < n; ++e) next[e] = start[e] + t * cand[e];
                if (!is_vertex(bm, next)) continue;

                if (std::find(st.vertices.begin(), st.vertices.end(), next) == st.vertices.end())
                    st.vertices.push_back(next);
                for (std::size_t e = 0; e < n; ++e)
                    if (next[e] != 0) uncovered.erase(e);
                advanced = true;
                break;
            }
            if (advanced) break;
        }
        if (!advanced) {
            st.stuck = true;
            return st;
        }
    }
    return st;
}

// Greedy cover of the still-uncovered coordinates by enumerated vertices.
std::vector<RatVec> greedy_cover(const std::vector<RatVec>& vertices, std::size_t n) {
    std::vector<bool> hit(n, false);
    std::vector<RatVec> chosen;
    auto missing = [&] {
        std::size_t m = 0;
        for (bool b : hit) m += !b;
        return m;
    };
    while (missing() > 0) {
        std::size_t best = vertices.size(), best_gain = 0;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            std::size_t gain = 0;
            for (std::size_t e = 0; e < n; ++e)
                if (!hit[e] && vertices[i][e] != 0) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best == vertices.size())
            throw TropError("internal-inconsistency", "vertex supports do not cover the faces");
        chosen.push_back(vertices[best]);
        for (std::size_t e = 0; e < n; ++e)
            if (vertices[best][e] != 0) hit[e] = true;
    }
    return chosen;
}

// Smallest covering subset of the enumerated vertices with size at most
// max_size, by increasing cardinality; deterministic first hit.
std::optional<std::vector<RatVec>> bounded_cover(const std::vector<RatVec>& vertices,
                                                 std::size_t n, std::size_t max_size) {
    for (std::size_t size = 1; size <= std::min(max_size, vertices.size()); ++size) {
        std::vector<std::size_t> idx(size);
        std::vector<RatVec> pick;
        auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> bool {
            if (depth == size) {
                pick.clear();
                for (std::size_t i : idx) pick.push_back(vertices[i]);
                return covers_all(pick, n);
            }
            for (std::size_t i = start; i < vertices.size(); ++i) {
                idx[depth] = i;
                if (self(self, i + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0, 0)) return pick;
    }
    return std::nullopt;
}

Decomposition finalize(const Complex& c, const BalanceMatrices& bm, std::vector<RatVec> chosen,
                       std::size_t kernel_dim, std::uint64_t limit) {
    const std::size_t n = bm.r.rows();

    // Drop redundant members in discovery order.
    for (std::size_t i = 0; i < chosen.size();) {
        std::vector<RatVec> rest;
        for (std::size_t j = 0; j < chosen.size(); ++j)
            if (j != i) rest.push_back(chosen[j]);
        if (!rest.empty() && covers_all(rest, n))
            chosen = std::move(rest);
        else
            ++i;
    }

    Decomposition dec;
    dec.bound_m = kernel_dim;
    try {
        auto all = enumerate_vertices_bruteforce(bm, limit);
        dec.unique = all.size() == kernel_dim;
        if (dec.unique) {
            chosen = all;  // a simplex has exactly one decomposition: everything
        } else {
            std::size_t bound = (kernel_dim - 1) / 2 + 1;
            if (chosen.size() > bound) {
                if (auto better = bounded_cover(all, n, bound)) chosen = *better;
            }
        }
    } catch (const TropError&) {
        // Enumeration over limit: keep the walk output, uniqueness unknown.
        dec.unique = false;
    }

    std::sort(chosen.begin(), chosen.end());
    dec.covering_combination.assign(n, Rational(0));
    for (const RatVec& v : chosen) {
        DecompositionPart part;
        part.weighting = v;
        part.support = support_of(v);
        part.certificate = is_extremal(induced_subcomplex(c, part.support));
        if (!part.certificate.extremal)
            throw TropError("internal-inconsistency", "decomposition part is not extremal");
        for (std::size_t e = 0; e < n; ++e) dec.covering_combination[e] += v[e];
        dec.parts.push_back(std::move(part));
    }
    Rational scale = make_rational(Int(1), Int(static_cast<long>(chosen.size())));
    for (auto& q : dec.covering_combination) q *= scale;
    return dec;
}

}  // namespace

std::size_t decomposition_upper_bound(const Complex& c) {
    BalanceMatrices bm = build_r(c);
    return c.faces().size() - rank(bm.r);
}

Decomposition decompose(const Complex& c, std::uint64_t limit, bool force_oracle) {
    BalanceMatrices bm = build_r(c);
    if (!has_positive_weighting(bm))
        throw TropError("not-tropical-variety", "no strictly positive balanced weighting exists");
    const std::size_t n = c.faces().size();
    const std::size_t kernel_dim = n - rank(bm.r);

    auto start = find_vertex(bm);
    if (!start) throw TropError("internal-inconsistency", "positive weighting but empty polytope");

    if (kernel_dim == 1) return finalize(c, bm, {*start}, 1, limit);

    std::vector<RatVec> chosen;
    bool use_oracle = force_oracle;
    if (!use_oracle) {
        WalkState walk = edge_walk(bm, *start, kernel_dim);
        chosen = walk.vertices;
        use_oracle = walk.stuck;
    }
    if (use_oracle) {
        auto all = enumerate_vertices_bruteforce(bm, limit);
        chosen = greedy_cover(all, n);
    }
    return finalize(c, bm, std::move(chosen), kernel_dim, limit);
}

std::optional<Decomposition> unique_decomposition(const Complex& c, std::uint64_t limit) {
    BalanceMatrices bm = build_r(c);
    if (!has_positive_weighting(bm))
        throw TropError("not-tropical-variety", "no strictly positive balanced weighting exists");
    const std::size_t kernel_dim = c.faces().size() - rank(bm.r);
    auto all = enumerate_vertices_bruteforce(bm, limit);
    if (all.size() != kernel_dim) return std::nullopt;
    return finalize(c, bm, all, kernel_dim, limit);
}

bool verify_decomposition(const Complex& c,
                          const std::vector<std::pair<std::vector<std::size_t>, RatVec>>& parts) {
    if (parts.empty()) return false;
    BalanceMatrices bm = build_r(c);
    const std::size_t n = c.faces().size();
    RatVec mix(n, Rational(0));
    for (const auto& [support, w] : parts) {
        if (!is_vertex(bm, w)) return false;
        if (support_of(w) != support) return false;
        for (std::size_t e = 0; e < n; ++e) mix[e] += w[e];
    }
    for (std::size_t e = 0; e < n; ++e)
        if (mix[e] <= 0) return false;
    return true;
}

}  // namespace trop
