#include "trop/cone.hpp"

#include <algorithm>
#include <bit>

namespace trop {

namespace {

// Dense simplex tableau kept in canonical form: the column of each basic
// variable is a unit vector and the right-hand side sits in the last
// column. Reduced costs are recomputed per iteration; the instances here
// are a few dozen rows, so simplicity wins over incremental updates.
class Tableau {
public:
    Tableau(RatMatrix t, std::vector<std::size_t> basis, std::size_t nvars)
        : t_(std::move(t)), basis_(std::move(basis)), nvars_(nvars) {
        basic_.assign(nvars_, false);
        for (std::size_t b : basis_) basic_[b] = true;
    }

    std::size_t rows() const { return t_.rows(); }
    const std::vector<std::size_t>& basis() const { return basis_; }
    Rational rhs(std::size_t i) const { return t_(i, nvars_); }
    Rational at(std::size_t i, std::size_t j) const { return t_(i, j); }

    void pivot(std::size_t r, std::size_t c) {
        Rational p = t_(r, c);
        for (std::size_t j = 0; j <= nvars_; ++j) t_(r, j) /= p;
        for (std::size_t i = 0; i < t_.rows(); ++i) {
            if (i == r || t_(i, c) == 0) continue;
            Rational f = t_(i, c);
            for (std::size_t j = 0; j <= nvars_; ++j) t_(i, j) -= f * t_(r, j);
        }
        basic_[basis_[r]] = false;
        basis_[r] = c;
        basic_[c] = true;
    }

    enum class Run { Optimal, Unbounded };

    // Bland's rule: entering variable is the smallest index with negative
    // reduced cost, leaving row breaks ratio ties by smallest basic index.
    Run run(const RatVec& cost, std::size_t enterable) {
        while (true) {
            std::size_t enter = nvars_;
            for (std::size_t j = 0; j < enterable; ++j) {
                if (basic_[j]) continue;
                Rational d = cost[j];
                for (std::size_t i = 0; i < t_.rows(); ++i) {
                    if (cost[basis_[i]] == 0 || t_(i, j) == 0) continue;
                    d -= cost[basis_[i]] * t_(i, j);
                }
                if (d < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == nvars_) return Run::Optimal;

            std::size_t leave = t_.rows();
            Rational best;
            for (std::size_t i = 0; i < t_.rows(); ++i) {
                if (t_(i, enter) <= 0) continue;
                Rational ratio = rhs(i) / t_(i, enter);
                if (leave == t_.rows() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == t_.rows()) return Run::Unbounded;
            pivot(leave, enter);
        }
    }

    void drop_row(std::size_t r) {
        RatMatrix nt(t_.rows() - 1, nvars_ + 1);
        std::vector<std::size_t> nb;
        std::size_t k = 0;
        for (std::size_t i = 0; i < t_.rows(); ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j <= nvars_; ++j) nt(k, j) = t_(i, j);
            nb.push_back(basis_[i]);
            ++k;
        }
        basic_[basis_[r]] = false;
        t_ = std::move(nt);
        basis_ = std::move(nb);
    }

private:
    RatMatrix t_;
    std::vector<std::size_t> basis_;
    std::size_t nvars_;
    std::vector<bool> basic_;
};

}  // namespace

LpResult solve_lp(const RatMatrix& a, const RatVec& b, const RatVec& c) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t total = n + m;  // originals + one artificial per row

    RatMatrix t(m, total + 1);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
        t(i, n + i) = 1;
        t(i, total) = flip ? Rational(-b[i]) : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
    Tableau tab(std::move(t), std::move(basis), total);

    RatVec phase1(total, Rational(0));
    for (std::size_t j = n; j < total; ++j) phase1[j] = 1;
    tab.run(phase1, total);

    Rational infeas = 0;
    for (std::size_t i = 0; i < tab.rows(); ++i)
        if (tab.basis()[i] >= n) infeas += tab.rhs(i);
    LpResult res;
    if (infeas != 0) {
        res.status = LpResult::Status::Infeasible;
        return res;
    }

    // Remove artificials still basic at zero; all-zero rows are redundant.
    for (std::size_t i = tab.rows(); i-- > 0;) {
        if (tab.basis()[i] < n) continue;
        std::size_t piv = n;
        for (std::size_t j = 0; j < n && piv == n; ++j)
            if (tab.at(i, j) != 0) piv = j;
        if (piv == n)
            tab.drop_row(i);
        else
            tab.pivot(i, piv);
    }

    RatVec phase2(total, Rational(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    if (tab.run(phase2, n) == Tableau::Run::Unbounded) {
        res.status = LpResult::Status::Unbounded;
        return res;
    }

    res.status = LpResult::Status::Optimal;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < tab.rows(); ++i) res.x[tab.basis()[i]] = tab.rhs(i);
    res.objective = dot(res.x, c);
    return res;
}

WeightCone weight_cone(const BalanceMatrices& bm) {
    WeightCone w;
    w.kernel_basis = left_kernel_basis(bm.r);
    w.dim = w.kernel_basis.size();
    return w;
}

std::optional<RatVec> find_vertex(const BalanceMatrices& bm) {
    const std::size_t n = bm.r.rows();   // faces
    const std::size_t k = bm.r.cols();
    RatMatrix a(k + 1, n);
    RatVec b(k + 1, Rational(0));
    for (std::size_t col = 0; col < k; ++col)
        for (std::size_t f = 0; f < n; ++f) a(col, f) = bm.r(f, col);
    for (std::size_t f = 0; f < n; ++f) a(k, f) = 1;
    b[k] = 1;
    RatVec c(n);
    for (std::size_t f = 0; f < n; ++f) c[f] = -Rational(static_cast<long>(f + 1));
    LpResult res = solve_lp(a, b, c);
    if (res.status != LpResult::Status::Optimal) return std::nullopt;
    return res.x;
}

bool has_positive_weighting(const BalanceMatrices& bm) {
    const std::size_t n = bm.r.rows();
    const std::size_t k = bm.r.cols();
    if (n == 0) return false;
    // Variables: x_0..x_{n-1}, t, s_0..s_{n-1}; maximize t subject to
    // x in P(C) and x_i - t - s_i = 0.
    const std::size_t nv = 2 * n + 1;
    RatMatrix a(k + 1 + n, nv);
    RatVec b(k + 1 + n, Rational(0));
    for (std::size_t col = 0; col < k; ++col)
        for (std::size_t f = 0; f < n; ++f) a(col, f) = bm.r(f, col);
    for (std::size_t f = 0; f < n; ++f) a(k, f) = 1;
    b[k] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        a(k + 1 + i, i) = 1;
        a(k + 1 + i, n) = -1;
        a(k + 1 + i, n + 1 + i) = -1;
    }
    RatVec c(nv, Rational(0));
    c[n] = -1;
    LpResult res = solve_lp(a, b, c);
    return res.status == LpResult::Status::Optimal && res.objective < 0;
}

namespace {

std::size_t submatrix_rank(const RatMatrix& k, const std::vector<std::size_t>& cols) {
    RatMatrix sub(k.rows(), cols.size());
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = k(i, cols[j]);
    return rank(sub);
}

std::optional<RatVec> vertex_for_support(const RatMatrix& kmat, const std::vector<bool>& support,
                                         std::size_t n) {
    std::vector<std::size_t> zero_cols;
    for (std::size_t e = 0; e < n; ++e)
        if (!support[e]) zero_cols.push_back(e);
    const std::size_t nk = kmat.rows();
    if (submatrix_rank(kmat, zero_cols) + 1 != nk) return std::nullopt;

    RatMatrix sub(nk, zero_cols.size());
    for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t j = 0; j < zero_cols.size(); ++j) sub(i, j) = kmat(i, zero_cols[j]);
    auto coeff = left_kernel_basis(sub);
    if (coeff.size() != 1) return std::nullopt;

    RatVec w(n, Rational(0));
    for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t e = 0; e < n; ++e) w[e] += coeff[0][i] * kmat(i, e);

    bool pos = false, neg = false;
    Rational sum = 0;
    for (std::size_t e = 0; e < n; ++e) {
        if ((w[e] != 0) != static_cast<bool>(support[e]))
            return std::nullopt;  // support must match exactly
        if (w[e] > 0) pos = true;
        if (w[e] < 0) neg = true;
        sum += w[e];
    }
    if (pos && neg) return std::nullopt;
    if (neg) {
        for (auto& v : w) v = -v;
        sum = -sum;
    }
    if (sum == 0) return std::nullopt;
    for (auto& v : w) v /= sum;
    return w;
}

}  // namespace

std::vector<RatVec> enumerate_vertices_bruteforce(const BalanceMatrices& bm, std::uint64_t limit) {
    const std::size_t n = bm.r.rows();
    auto kb = left_kernel_basis(bm.r);
    const std::size_t nk = kb.size();
    std::vector<RatVec> out;
    if (nk == 0) return out;

    RatMatrix kmat = rows_to_matrix(kb, n);
    if (nk == 1) {
        // The kernel is a line; the only candidate support is the support
        // of its generator.
        std::vector<bool> support(n, false);
        for (std::size_t e = 0; e < n; ++e) support[e] = kmat(0, e) != 0;
        if (auto w = vertex_for_support(kmat, support, n)) out.push_back(*w);
        return out;
    }

    if (n >= 63) throw TropError("limit-exceeded", "too many faces for support enumeration");
    if ((std::uint64_t{1} << n) - 1 > limit)
        throw TropError("limit-exceeded", "candidate active sets over limit");
    std::uint64_t count = 0;
    std::vector<bool> support(n, false);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (++count > limit) throw TropError("limit-exceeded", "candidate active sets over limit");
        std::size_t zero_count = n - static_cast<std::size_t>(std::popcount(mask));
        if (zero_count + 1 < nk) continue;
        for (std::size_t e = 0; e < n; ++e) support[e] = (mask >> e & 1) != 0;
        if (auto w = vertex_for_support(kmat, support, n)) out.push_back(*w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_vertex(const BalanceMatrices& bm, const RatVec& x) {
    const std::size_t n = bm.r.rows();
    if (x.size() != n) return false;
    Rational sum = 0;
    for (const Rational& v : x) {
        if (v < 0) return false;
        sum += v;
    }
    if (sum != 1) return false;
    for (std::size_t col = 0; col < bm.r.cols(); ++col) {
        Rational s = 0;
        for (std::size_t f = 0; f < n; ++f) s += x[f] * bm.r(f, col);
        if (s != 0) return false;
    }
    auto kb = left_kernel_basis(bm.r);
    RatMatrix kmat = rows_to_matrix(kb, n);
    std::vector<std::size_t> zero_cols;
    for (std::size_t e = 0; e < n; ++e)
        if (x[e] == 0) zero_cols.push_back(e);
    return submatrix_rank(kmat, zero_cols) + 1 == kb.size();
}

std::vector<Subvariety> extremal_subvarieties(const Complex& c, std::uint64_t limit) {
    BalanceMatrices bm = build_r(c);
    std::vector<Subvariety> out;
    for (const RatVec& v : enumerate_vertices_bruteforce(bm, limit)) {
        Subvariety s;
        s.weighting = v;
        for (std::size_t e = 0; e < v.size(); ++e)
            if (v[e] != 0) s.support.push_back(e);
        ExtremalityCertificate cert = is_extremal(induced_subcomplex(c, s.support));
        if (!cert.extremal)
            throw TropError("internal-inconsistency",
                            "vertex support did not induce an extremal subcomplex");
        out.push_back(std::move(s));
    }
    return out;
}

bool is_simplex(const std::vector<RatVec>& vertices) {
    if (vertices.empty()) return false;
    if (vertices.size() == 1) return true;
    const std::size_t n = vertices.front().size();
    RatMatrix diffs(vertices.size() - 1, n);
    for (std::size_t i = 1; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) diffs(i - 1, j) = vertices[i][j] - vertices[0][j];
    return vertices.size() == rank(diffs) + 1;
}

}  // namespace trop
