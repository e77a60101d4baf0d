#include "trop/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace trop {

using boost::multiprecision::abs;

Rref rref(RatMatrix a) {
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        Rational piv = a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) /= piv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.m = std::move(a);
    return out;
}

IntMatrix clear_denominators(const RatMatrix& m) {
    IntMatrix b(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, Int(denominator(m(i, j))));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            b(i, j) = Int(numerator(q)) * (l / Int(denominator(q)));
        }
    }
    return b;
}

IntVec clear_denominators(const RatVec& v) {
    Int l = common_denominator(v);
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Int(numerator(v[i])) * (l / Int(denominator(v[i])));
    return out;
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix b = m;
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < b.cols() && r < b.rows(); ++c) {
        std::size_t p = r;
        while (p < b.rows() && b(p, c) == 0) ++p;
        if (p == b.rows()) continue;
        b.swap_rows(p, r);
        for (std::size_t i = r + 1; i < b.rows(); ++i) {
            for (std::size_t j = c + 1; j < b.cols(); ++j)
                b(i, j) = (b(r, c) * b(i, j) - b(i, c) * b(r, j)) / prev;
            b(i, c) = 0;
        }
        prev = b(r, c);
        ++r;
    }
    return r;
}

std::size_t rank(const RatMatrix& m) { return rank(clear_denominators(m)); }

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
    const std::size_t n = m.cols();
    Rref rr = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec x(n, Rational(0));
        x[f] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) x[rr.pivot_cols[i]] = -rr.m(i, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

RatMatrix rows_to_matrix(const std::vector<RatVec>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

namespace {

std::vector<RatVec> canonical_rows(const std::vector<RatVec>& rows, std::size_t cols) {
    Rref rr = rref(rows_to_matrix(rows, cols));
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < rr.rank; ++i) out.push_back(rr.m.row(i));
    return out;
}

}  // namespace

std::vector<RatVec> left_kernel_basis(const RatMatrix& m) {
    return canonical_rows(kernel_basis(m.transposed()), m.rows());
}

std::vector<RatVec> left_kernel_basis(const IntMatrix& m) {
    return left_kernel_basis(to_rational(m));
}

bool same_row_space(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
    if (a.empty() && b.empty()) return true;
    std::size_t cols = a.empty() ? b.front().size() : a.front().size();
    return canonical_rows(a, cols) == canonical_rows(b, cols);
}

Hnf hnf(const IntMatrix& m) {
    Hnf out;
    out.h = m;
    out.u = IntMatrix::identity(m.rows());
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    const std::size_t rows = m.rows(), cols = m.cols();

    auto sub_rows = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols; ++j) h(dst, j) -= q * h(src, j);
        for (std::size_t j = 0; j < rows; ++j) u(dst, j) -= q * u(src, j);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < cols; ++j) h(i, j) = -h(i, j);
        for (std::size_t j = 0; j < rows; ++j) u(i, j) = -u(i, j);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclidean elimination below the pivot row.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                if (best == rows || abs(h(i, c)) < abs(h(best, c))) best = i;
            }
            if (best == rows) break;
            h.swap_rows(best, r);
            u.swap_rows(best, r);
            bool reduced = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                sub_rows(i, r, h(i, c) / h(r, c));
                if (h(i, c) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (r >= rows || h(r, c) == 0) continue;
        if (h(r, c) < 0) negate_row(r);
        for (std::size_t i = 0; i < r; ++i) sub_rows(i, r, floor_div(h(i, c), h(r, c)));
        ++r;
    }
    out.rank = r;
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const std::size_t n = m.cols();
    if (m.rows() == 0) return IntMatrix::identity(n);
    Hnf t = hnf(m.transposed());
    std::vector<std::size_t> zero_rows;
    for (std::size_t i = 0; i < n; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < m.rows() && zero; ++j) zero = t.h(i, j) == 0;
        if (zero) zero_rows.push_back(i);
    }
    IntMatrix k(zero_rows.size(), n);
    for (std::size_t i = 0; i < zero_rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) k(i, j) = t.u(zero_rows[i], j);
    return hnf(k).h;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Rref rr = rref(std::move(aug));
    for (std::size_t c : rr.pivot_cols)
        if (c == m.cols()) return std::nullopt;
    RatVec x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) x[rr.pivot_cols[i]] = rr.m(i, m.cols());
    return x;
}

Int determinant(const IntMatrix& m) {
    IntMatrix b = m;
    const std::size_t n = b.rows();
    Int prev = 1;
    int sign = 1;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t p = r;
        while (p < n && b(p, r) == 0) ++p;
        if (p == n) return 0;
        if (p != r) {
            b.swap_rows(p, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j)
                b(i, j) = (b(r, r) * b(i, j) - b(i, r) * b(r, j)) / prev;
            b(i, r) = 0;
        }
        prev = b(r, r);
    }
    return sign > 0 ? b(n - 1, n - 1) : Int(-b(n - 1, n - 1));
}

}  // namespace trop
