#include "trop/complex.hpp"

#include <algorithm>

namespace trop {

Complex::Complex(std::size_t ambient_dim, std::size_t dim, std::vector<Ridge> ridges,
                 std::vector<MaxFace> faces)
    : ambient_dim_(ambient_dim), dim_(dim), ridges_(std::move(ridges)), faces_(std::move(faces)) {
    if (dim_ < 1 || dim_ > ambient_dim_)
        throw TropError("bad-dimension", "need 1 <= dim <= ambient_dim");
    auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
    std::sort(ridges_.begin(), ridges_.end(), by_id);
    std::sort(faces_.begin(), faces_.end(), by_id);
    for (std::size_t i = 0; i < ridges_.size(); ++i) {
        if (!ridge_by_id_.emplace(ridges_[i].id, i).second)
            throw TropError("duplicate-id", "ridge id '" + ridges_[i].id + "'");
    }
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (!face_by_id_.emplace(faces_[i].id, i).second)
            throw TropError("duplicate-id", "face id '" + faces_[i].id + "'");
    }
    ridge_faces_.resize(ridges_.size());
    face_ridges_.resize(faces_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        for (const std::string& rid : faces_[f].ridge_ids) {
            auto it = ridge_by_id_.find(rid);
            if (it == ridge_by_id_.end())
                throw TropError("unknown-ridge", "face '" + faces_[f].id + "' lists '" + rid + "'");
            face_ridges_[f].push_back(it->second);
            ridge_faces_[it->second].push_back(f);
        }
        std::sort(face_ridges_[f].begin(), face_ridges_[f].end());
    }
    for (auto& v : ridge_faces_) std::sort(v.begin(), v.end());
}

std::size_t Complex::face_index(const std::string& id) const {
    auto it = face_by_id_.find(id);
    if (it == face_by_id_.end()) throw TropError("unknown-face", "'" + id + "'");
    return it->second;
}

std::size_t Complex::ridge_index(const std::string& id) const {
    auto it = ridge_by_id_.find(id);
    if (it == ridge_by_id_.end()) throw TropError("unknown-ridge", "'" + id + "'");
    return it->second;
}

void Complex::set_ridge_normals(std::size_t ridge, std::vector<IntVec> normals) {
    normal_overrides_[ridge] = std::move(normals);
}

const std::vector<IntVec>* Complex::normals_override(std::size_t ridge) const {
    auto it = normal_overrides_.find(ridge);
    return it == normal_overrides_.end() ? nullptr : &it->second;
}

namespace {

std::size_t basis_rank(const std::vector<RatVec>& basis, std::size_t d) {
    return rank(rows_to_matrix(basis, d));
}

}  // namespace

ValidationReport validate(const Complex& c) {
    ValidationReport rep;
    const std::size_t d = c.ambient_dim(), k = c.dim();
    for (const MaxFace& f : c.faces()) {
        if (f.point.size() != d)
            rep.issues.push_back({"bad-dimension", "face '" + f.id + "' point"});
        bool lengths_ok = true;
        for (const RatVec& v : f.basis) lengths_ok = lengths_ok && v.size() == d;
        if (!lengths_ok || f.basis.size() != k)
            rep.issues.push_back({"bad-dimension", "face '" + f.id + "' basis"});
        else if (basis_rank(f.basis, d) != k)
            rep.issues.push_back({"degenerate-basis", "face '" + f.id + "'"});
    }
    for (std::size_t r = 0; r < c.ridges().size(); ++r) {
        const Ridge& t = c.ridges()[r];
        if (t.point.size() != d)
            rep.issues.push_back({"bad-dimension", "ridge '" + t.id + "' point"});
        bool lengths_ok = true;
        for (const RatVec& v : t.basis) lengths_ok = lengths_ok && v.size() == d;
        if (!lengths_ok || t.basis.size() != k - 1)
            rep.issues.push_back({"bad-dimension", "ridge '" + t.id + "' basis"});
        else if (k > 1 && basis_rank(t.basis, d) != k - 1)
            rep.issues.push_back({"degenerate-basis", "ridge '" + t.id + "'"});
        if (c.incident_faces(r).size() < 2)
            rep.issues.push_back({"not-pure", "ridge '" + t.id + "' lies in fewer than two faces"});
        for (std::size_t f : c.incident_faces(r)) {
            const MaxFace& face = c.faces()[f];
            if (face.basis.size() != k || t.basis.size() != k - 1) continue;
            std::vector<RatVec> stacked = face.basis;
            stacked.insert(stacked.end(), t.basis.begin(), t.basis.end());
            if (basis_rank(stacked, d) != k)
                rep.issues.push_back(
                    {"ridge-span-outside-face", "ridge '" + t.id + "' vs face '" + face.id + "'"});
        }
    }
    return rep;
}

IntMatrix saturate_lattice(const std::vector<RatVec>& basis, std::size_t ambient_dim) {
    IntMatrix b = clear_denominators(rows_to_matrix(basis, ambient_dim));
    IntMatrix orth = integer_kernel(b);
    return integer_kernel(orth);
}

namespace {

// Coordinates of `vecs` rows in the lattice basis `lat` (rows). Entries are
// integral whenever the vectors lie in the lattice.
IntMatrix lattice_coordinates(const IntMatrix& lat, const IntMatrix& vecs, const char* what) {
    RatMatrix lt = to_rational(lat).transposed();
    IntMatrix coords(vecs.rows(), lat.rows());
    for (std::size_t i = 0; i < vecs.rows(); ++i) {
        auto x = solve(lt, to_rational(vecs.row(i)));
        if (!x) throw TropError("span-mismatch", what);
        for (std::size_t j = 0; j < lat.rows(); ++j) {
            if (denominator((*x)[j]) != 1) throw TropError("lattice-mismatch", what);
            coords(i, j) = Int(numerator((*x)[j]));
        }
    }
    return coords;
}

}  // namespace

IntVec z_vector(const Complex& c, std::size_t ridge, std::size_t face) {
    const std::size_t d = c.ambient_dim(), k = c.dim();
    const Ridge& tau = c.ridges()[ridge];
    const MaxFace& sigma = c.faces()[face];

    IntMatrix lat_sigma = saturate_lattice(sigma.basis, d);
    if (lat_sigma.rows() != k) throw TropError("degenerate-basis", "face '" + sigma.id + "'");
    IntMatrix lat_tau = saturate_lattice(tau.basis, d);

    IntVec z(d);
    if (k == 1) {
        for (std::size_t j = 0; j < d; ++j) z[j] = lat_sigma(0, j);
    } else {
        IntMatrix coords =
            lattice_coordinates(lat_sigma, lat_tau, "ridge lattice inside face lattice");
        // A primitive functional vanishing on the ridge sublattice; any
        // integer vector it maps to 1 generates the quotient.
        auto phi_basis = kernel_basis(to_rational(coords));
        if (phi_basis.size() != 1) throw TropError("degenerate-basis", "ridge '" + tau.id + "'");
        IntVec phi = primitive_vector(clear_denominators(phi_basis[0]));
        IntVec u(k, Int(0));
        Int g = phi[0];
        u[0] = 1;
        for (std::size_t i = 1; i < k; ++i) {
            Xgcd e = xgcd(g, phi[i]);
            for (std::size_t j = 0; j < i; ++j) u[j] *= e.s;
            u[i] = e.t;
            g = e.g;
        }
        for (std::size_t j = 0; j < d; ++j) {
            z[j] = 0;
            for (std::size_t i = 0; i < k; ++i) z[j] += u[i] * lat_sigma(i, j);
        }
    }

    // Orientation: interior(sigma) - interior(tau) = v + mu * z with v in
    // L_tau; mu must be positive for z to point into sigma.
    RatMatrix a(d, k);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j + 1 < k; ++j) a(i, j) = Rational(lat_tau(j, i));
        a(i, k - 1) = Rational(z[i]);
    }
    RatVec delta(d);
    for (std::size_t i = 0; i < d; ++i) delta[i] = sigma.point[i] - tau.point[i];
    auto x = solve(a, delta);
    if (!x)
        throw TropError("witness-outside-span",
                        "face '" + sigma.id + "' witness not in span of ridge '" + tau.id + "'");
    Rational mu = (*x)[k - 1];
    if (mu == 0)
        throw TropError("degenerate-witness",
                        "witness of face '" + sigma.id + "' lies in the span of ridge '" + tau.id + "'");
    if (mu < 0)
        for (Int& e : z) e = -e;

    // Canonical representative modulo the ridge lattice (rows are in HNF).
    for (std::size_t r = 0; r < lat_tau.rows(); ++r) {
        std::size_t p = 0;
        while (p < d && lat_tau(r, p) == 0) ++p;
        if (p == d) continue;
        Int q = floor_div(z[p], lat_tau(r, p));
        if (q != 0)
            for (std::size_t j = 0; j < d; ++j) z[j] -= q * lat_tau(r, j);
    }
    return z;
}

std::vector<IntVec> ridge_normals(const Complex& c, std::size_t ridge) {
    if (const auto* o = c.normals_override(ridge)) return *o;
    const std::size_t d = c.ambient_dim();
    const Ridge& tau = c.ridges()[ridge];
    std::vector<IntVec> out;
    if (tau.basis.empty()) {
        for (std::size_t i = 0; i < d; ++i) {
            IntVec e(d, Int(0));
            e[i] = 1;
            out.push_back(std::move(e));
        }
        return out;
    }
    IntMatrix b = clear_denominators(rows_to_matrix(tau.basis, d));
    IntMatrix k = integer_kernel(b);
    for (std::size_t i = 0; i < k.rows(); ++i) out.push_back(k.row(i));
    return out;
}

Complex induced_subcomplex(const Complex& c, const std::vector<std::size_t>& support) {
    std::vector<bool> in_support(c.faces().size(), false);
    for (std::size_t f : support) in_support[f] = true;
    std::vector<bool> keep_ridge(c.ridges().size(), false);
    for (std::size_t r = 0; r < c.ridges().size(); ++r)
        for (std::size_t f : c.incident_faces(r))
            if (in_support[f]) keep_ridge[r] = true;

    std::vector<Ridge> ridges;
    for (std::size_t r = 0; r < c.ridges().size(); ++r)
        if (keep_ridge[r]) ridges.push_back(c.ridges()[r]);
    std::vector<MaxFace> faces;
    for (std::size_t f : support) faces.push_back(c.faces()[f]);

    Complex sub(c.ambient_dim(), c.dim(), std::move(ridges), std::move(faces));
    for (std::size_t r = 0; r < c.ridges().size(); ++r) {
        if (!keep_ridge[r]) continue;
        if (const auto* o = c.normals_override(r))
            sub.set_ridge_normals(sub.ridge_index(c.ridges()[r].id), *o);
    }
    return sub;
}

}  // namespace trop
