#pragma once

// Frozen reference matrices shared by the unit and acceptance suites.
// hyperplane_r: balance matrix of the 2-dimensional hyperplane variety
//   V(max(0,x,y,z)) in R^3, rows in face order xy,xz,x0,yz,y0,z0 and
//   ridge-normal choices pinned by the hyperplane3d fixture.
// prism_rigidity: rigidity matrix of the 6-vertex prism-shaped framework
//   (inner triangle (1,1),(5,1),(1,5); outer (0,0),(8,0),(0,8)).
// tripleunion_r: balance matrix of the union of three tropical lines
//   (fixture triple-union), with its three 0/1 left-kernel generators.

#include "trop/complex.hpp"
#include "trop/matrix.hpp"

namespace testdata {

inline trop::RatVec rv(std::initializer_list<long> xs) {
    trop::RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline trop::IntVec iv(std::initializer_list<long> xs) {
    trop::IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// The 2-dimensional hyperplane variety of max(0,x,y,z) in R^3: six maximal
// faces (pairs of tying terms) and four ridges (triples). Face order f0..f5 =
// xy,xz,x0,yz,y0,z0; ridge order t0..t3 = x,y,z,0. Ridge normals are pinned
// to the choices the frozen hyperplane_r matrix was derived with.
inline trop::Complex hyperplane3d() {
    std::vector<trop::Ridge> ridges = {
        {"t0", rv({-1, 0, 0}), {rv({1, 0, 0})}},
        {"t1", rv({0, -1, 0}), {rv({0, 1, 0})}},
        {"t2", rv({0, 0, -1}), {rv({0, 0, 1})}},
        {"t3", rv({1, 1, 1}), {rv({1, 1, 1})}},
    };
    std::vector<trop::MaxFace> faces = {
        {"f0", rv({-1, -1, 0}), {rv({1, 0, 0}), rv({0, 1, 0})}, {"t0", "t1"}},
        {"f1", rv({-1, 0, -1}), {rv({1, 0, 0}), rv({0, 0, 1})}, {"t0", "t2"}},
        {"f2", rv({-1, 1, 1}), {rv({1, 0, 0}), rv({0, 1, 1})}, {"t0", "t3"}},
        {"f3", rv({0, -1, -1}), {rv({0, 1, 0}), rv({0, 0, 1})}, {"t1", "t2"}},
        {"f4", rv({1, -1, 1}), {rv({0, 1, 0}), rv({1, 0, 1})}, {"t1", "t3"}},
        {"f5", rv({1, 1, -1}), {rv({0, 0, 1}), rv({1, 1, 0})}, {"t2", "t3"}},
    };
    trop::Complex c(3, 2, std::move(ridges), std::move(faces));
    c.set_ridge_normals(0, {iv({0, 1, 0}), iv({0, 0, 1})});
    c.set_ridge_normals(1, {iv({1, 0, 0}), iv({0, 0, 1})});
    c.set_ridge_normals(2, {iv({1, 0, 0}), iv({0, 1, 0})});
    c.set_ridge_normals(3, {iv({1, -1, 0}), iv({1, 1, -2})});
    return c;
}

// One vertex at the origin with six rays +/-e1, +/-e2, +/-(e1+e2); face
// order matches the sixray_r rows.
inline trop::Complex sixray() {
    std::vector<trop::Ridge> ridges = {{"v", rv({0, 0}), {}}};
    std::vector<trop::MaxFace> faces = {
        {"f0", rv({1, 0}), {rv({1, 0})}, {"v"}},  {"f1", rv({-1, 0}), {rv({1, 0})}, {"v"}},
        {"f2", rv({0, 1}), {rv({0, 1})}, {"v"}},  {"f3", rv({0, -1}), {rv({0, 1})}, {"v"}},
        {"f4", rv({1, 1}), {rv({1, 1})}, {"v"}},  {"f5", rv({-1, -1}), {rv({1, 1})}, {"v"}},
    };
    return trop::Complex(2, 1, std::move(ridges), std::move(faces));
}

inline trop::IntMatrix hyperplane_r() {
    return trop::IntMatrix::from_rows({
        {-1, 0, -1, 0, 0, 0, 0, 0},
        {0, -1, 0, 0, -1, 0, 0, 0},
        {1, 1, 0, 0, 0, 0, -1, -1},
        {0, 0, 0, -1, 0, -1, 0, 0},
        {0, 0, 1, 1, 0, 0, 1, -1},
        {0, 0, 0, 0, 1, 1, 0, 2},
    });
}

inline trop::IntMatrix prism_rigidity() {
    return trop::IntMatrix::from_rows({
        {-4, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, -4, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0},
        {0, 0, 4, -4, -4, 4, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, -8, 0, 8, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, -8, 0, 0, 0, 8},
        {0, 0, 0, 0, 0, 0, 0, 0, 8, -8, -8, 8},
        {1, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0},
        {0, 0, -3, 1, 0, 0, 0, 0, 3, -1, 0, 0},
        {0, 0, 0, 0, -1, 3, 0, 0, 0, 0, 1, -3},
    });
}

inline trop::IntMatrix tripleunion_r() {
    return trop::IntMatrix::from_rows({
        {-1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
        {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 1, 0, 0, -1, -1, 0, 0, 0, 0},
        {0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 1, 1, 0, 0, -1, -1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
    });
}

inline trop::IntMatrix tripleunion_kernel() {
    return trop::IntMatrix::from_rows({
        {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0},
        {0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 1},
    });
}

// Balance matrix of the six-ray fan fixture (sixray): one vertex at the
// origin, rays +/-e1, +/-e2, +/-(e1+e2), standard-basis ridge normals.
inline trop::IntMatrix sixray_r() {
    return trop::IntMatrix::from_rows({
        {1, 0},
        {-1, 0},
        {0, 1},
        {0, -1},
        {1, 1},
        {-1, -1},
    });
}

}  // namespace testdata
