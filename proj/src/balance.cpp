#include "trop/balance.hpp"

#include "trop/cone.hpp"

namespace trop {

Weighting make_weighting(const Complex& c, const std::map<std::string, Rational>& by_id,
                         WeightKind kind) {
    Weighting w;
    w.kind = kind;
    w.values.assign(c.faces().size(), Rational(0));
    for (const auto& [id, value] : by_id) w.values[c.face_index(id)] = value;
    bool has_zero = false;
    for (const Rational& v : w.values) {
        if (v == 0) has_zero = true;
        if (kind == WeightKind::TotalPositive && v <= 0)
            throw TropError("bad-weighting", "total-positive weighting needs every value > 0");
        if (kind == WeightKind::Partial && v < 0)
            throw TropError("bad-weighting", "partial weighting needs every value >= 0");
    }
    if (kind == WeightKind::Partial && !has_zero)
        throw TropError("bad-weighting", "partial weighting needs at least one zero");
    return w;
}

BalanceMatrices build_r(const Complex& c) {
    const std::size_t d = c.ambient_dim();
    const std::size_t t = c.t();
    const std::size_t nf = c.faces().size();
    const std::size_t nr = c.ridges().size();

    BalanceMatrices bm;
    bm.t = t;
    for (const MaxFace& f : c.faces()) bm.face_order.push_back(f.id);
    for (const Ridge& r : c.ridges()) bm.ridge_order.push_back(r.id);

    bm.r_tilde = RatMatrix(nf, d * nr);
    bm.l = RatMatrix(d * nr, t * nr);
    for (std::size_t r = 0; r < nr; ++r) {
        auto normals = ridge_normals(c, r);
        if (normals.size() != t)
            throw TropError("bad-normals",
                            "ridge '" + c.ridges()[r].id + "' needs " + std::to_string(t) +
                                " normals");
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < d; ++j) bm.l(d * r + j, t * r + i) = Rational(normals[i][j]);
        for (std::size_t f : c.incident_faces(r)) {
            IntVec z = z_vector(c, r, f);
            for (std::size_t j = 0; j < d; ++j) bm.r_tilde(f, d * r + j) = Rational(z[j]);
        }
    }
    bm.r = bm.r_tilde * bm.l;
    return bm;
}

BalanceReport is_balanced(const BalanceMatrices& bm, const RatVec& values) {
    BalanceReport rep;
    rep.balanced = true;
    const std::size_t t = bm.t;
    for (std::size_t r = 0; r < bm.ridge_order.size(); ++r) {
        RidgeResidual res;
        res.ridge_id = bm.ridge_order[r];
        res.components.assign(t, Rational(0));
        for (std::size_t i = 0; i < t; ++i) {
            Rational s = 0;
            for (std::size_t f = 0; f < values.size(); ++f) s += values[f] * bm.r(f, t * r + i);
            res.components[i] = s;
            if (s != 0) rep.balanced = false;
        }
        rep.residuals.push_back(std::move(res));
    }
    return rep;
}

BalanceReport is_balanced(const Complex& c, const Weighting& w) {
    if (w.values.size() != c.faces().size())
        throw TropError("bad-weighting", "weighting not defined on all faces");
    return is_balanced(build_r(c), w.values);
}

ExtremalityCertificate is_extremal(const Complex& c) {
    BalanceMatrices bm = build_r(c);
    if (!has_positive_weighting(bm))
        throw TropError("not-tropical-variety",
                        "no strictly positive balanced weighting exists");
    ExtremalityCertificate cert;
    cert.num_faces = c.faces().size();
    cert.rank = rank(bm.r);
    cert.kernel_basis = left_kernel_basis(bm.r);
    cert.extremal = cert.rank + 1 == cert.num_faces;
    return cert;
}

std::size_t weighting_space_dim(const Complex& c) {
    BalanceMatrices bm = build_r(c);
    return c.faces().size() - rank(bm.r);
}

bool check_extremal_bound(const Complex& c) {
    return c.faces().size() <= c.t() * c.ridges().size() + 1;
}

}  // namespace trop
