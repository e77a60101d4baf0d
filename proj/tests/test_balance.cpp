#include <random>

#include "doctest.h"
#include "testdata.hpp"
#include "trop/balance.hpp"
#include "trop/cone.hpp"

using namespace trop;
using testdata::iv;
using testdata::rv;

namespace {

// Standard tropical line: one vertex, rays (1,1), (-1,0), (0,-1).
Complex tropical_line() {
    std::vector<Ridge> ridges = {{"v", rv({0, 0}), {}}};
    std::vector<MaxFace> faces = {
        {"e0", rv({1, 1}), {rv({1, 1})}, {"v"}},
        {"e1", rv({-1, 0}), {rv({1, 0})}, {"v"}},
        {"e2", rv({0, -1}), {rv({0, 1})}, {"v"}},
    };
    return Complex(2, 1, std::move(ridges), std::move(faces));
}

// A single ray: carries no balanced weighting at all.
Complex single_ray() {
    std::vector<Ridge> ridges = {{"v", rv({0, 0}), {}}};
    std::vector<MaxFace> faces = {{"e", rv({1, 0}), {rv({1, 0})}, {"v"}}};
    return Complex(2, 1, std::move(ridges), std::move(faces));
}

}  // namespace

TEST_CASE("build_r reproduces the frozen hyperplane matrix") {
    BalanceMatrices bm = build_r(testdata::hyperplane3d());
    CHECK(bm.r == to_rational(testdata::hyperplane_r()));
    CHECK(bm.r_tilde * bm.l == bm.r);
    CHECK(bm.t == 2);
    CHECK(bm.face_order == std::vector<std::string>{"f0", "f1", "f2", "f3", "f4", "f5"});
}

TEST_CASE("build_r reproduces the six-ray fan matrix") {
    BalanceMatrices bm = build_r(testdata::sixray());
    CHECK(bm.r == to_rational(testdata::sixray_r()));
}

TEST_CASE("build_r on a single ray") {
    BalanceMatrices bm = build_r(single_ray());
    CHECK(bm.r.rows() == 1);
    CHECK(bm.r.cols() == 2);
    CHECK(bm.r(0, 0) == 1);
    CHECK(bm.r(0, 1) == 0);
    CHECK(left_kernel_basis(bm.r).empty());
}

TEST_CASE("is_balanced") {
    Complex line = tropical_line();
    Weighting ones = make_weighting(
        line, {{"e0", Rational(1)}, {"e1", Rational(1)}, {"e2", Rational(1)}},
        WeightKind::TotalPositive);
    CHECK(is_balanced(line, ones).balanced);

    Weighting skew = make_weighting(
        line, {{"e0", Rational(2)}, {"e1", Rational(1)}, {"e2", Rational(1)}},
        WeightKind::TotalPositive);
    BalanceReport rep = is_balanced(line, skew);
    CHECK(!rep.balanced);
    // Residual at the vertex: 2*(1,1) - (1,0) - (0,1) = (1,1).
    CHECK(rep.residuals.size() == 1);
    CHECK(rep.residuals[0].components == RatVec{Rational(1), Rational(1)});

    Weighting zero{WeightKind::Unrestricted, RatVec(3, Rational(0))};
    CHECK(is_balanced(line, zero).balanced);

    Weighting hyper_ones{WeightKind::TotalPositive, RatVec(6, Rational(1))};
    CHECK(is_balanced(testdata::hyperplane3d(), hyper_ones).balanced);
}

TEST_CASE("make_weighting validates its kind") {
    Complex line = tropical_line();
    CHECK_THROWS_AS(make_weighting(line, {{"e0", Rational(1)}}, WeightKind::TotalPositive),
                    TropError);
    CHECK_THROWS_AS(make_weighting(line, {{"e0", Rational(-1)}}, WeightKind::Partial), TropError);
    Weighting p = make_weighting(line, {{"e0", Rational(1)}}, WeightKind::Partial);
    CHECK(p.values[line.face_index("e1")] == 0);
}

TEST_CASE("extremality by rank") {
    ExtremalityCertificate hyper = is_extremal(testdata::hyperplane3d());
    CHECK(hyper.extremal);
    CHECK(hyper.rank == 5);
    CHECK(hyper.num_faces == 6);
    CHECK(hyper.kernel_basis.size() == 1);

    CHECK(!is_extremal(testdata::sixray()).extremal);
    CHECK(is_extremal(tropical_line()).extremal);

    CHECK_THROWS_WITH_AS(is_extremal(single_ray()), doctest::Contains("not-tropical-variety"),
                         TropError);
}

TEST_CASE("weighting_space_dim") {
    CHECK(weighting_space_dim(testdata::sixray()) == 4);
    CHECK(weighting_space_dim(testdata::hyperplane3d()) == 1);
    CHECK(weighting_space_dim(tropical_line()) == 1);
}

TEST_CASE("extremal face-count bound") {
    CHECK(check_extremal_bound(testdata::hyperplane3d()));  // 6 <= 2*4+1
    CHECK(check_extremal_bound(tropical_line()));           // 3 <= 2*1+1
    CHECK(!check_extremal_bound(testdata::sixray()));       // 6 > 2*1+1
}

TEST_CASE("kernel vectors scale and add to balanced weightings") {
    BalanceMatrices bm = build_r(testdata::sixray());
    auto kb = left_kernel_basis(bm.r);
    REQUIRE(kb.size() == 4);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        RatVec w(6, Rational(0));
        for (const auto& k : kb) {
            long cco = static_cast<long>(rng() % 9) - 4;
            for (std::size_t e = 0; e < 6; ++e) w[e] += Rational(cco) * k[e];
        }
        CHECK(is_balanced(bm, w).balanced);
        RatVec scaled = w;
        for (auto& v : scaled) v *= make_rational(Int(-3), Int(7));
        CHECK(is_balanced(bm, scaled).balanced);
    }
}

TEST_CASE("left kernel of R is invariant under the choice of ridge normals") {
    Complex base = testdata::hyperplane3d();
    auto reference = left_kernel_basis(build_r(base).r);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        Complex c = testdata::hyperplane3d();
        for (std::size_t r = 0; r < c.ridges().size(); ++r) {
            auto normals = ridge_normals(base, r);
            // Random integer change of the normal set keeping independence.
            std::vector<IntVec> mixed(normals.size(), IntVec(3, Int(0)));
            Int det = 0;
            while (det == 0) {
                IntMatrix u(2, 2);
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j)
                        u(i, j) = static_cast<long>(rng() % 7) - 3;
                det = determinant(u);
                if (det == 0) continue;
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t k = 0; k < 3; ++k)
                        mixed[i][k] = u(i, 0) * normals[0][k] + u(i, 1) * normals[1][k];
            }
            c.set_ridge_normals(r, mixed);
        }
        BalanceMatrices bm = build_r(c);
        CHECK(same_row_space(left_kernel_basis(bm.r), reference));
        CHECK(rank(bm.r) == 5);
    }
}
