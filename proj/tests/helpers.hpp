#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "circum/circumsphere3.hpp"
#include "circum/circumsphere_nd.hpp"
#include "circum/generate.hpp"
#include "circum/linalg.hpp"

namespace test_helpers {

using circum::SimplexN;
using circum::SquareMatrix;
using circum::Triangle3;
using circum::Vec3;
using circum::VecN;

// Brute-force determinant by full permutation expansion; independent of
// the library's cofactor/LU paths.
inline double det_bruteforce(const SquareMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double total = 0.0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        double prod = (inversions % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) prod *= m(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Edge vectors of a unit-edge regular k-simplex from the Cholesky factor
// of the Gram matrix (diag 1, off-diagonal 1/2).
inline std::vector<VecN> regular_simplex_edges(std::size_t k) {
    SquareMatrix g(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g(i, j) = (i == j) ? 1.0 : 0.5;

    SquareMatrix l(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = g(i, j);
            for (std::size_t p = 0; p < j; ++p) s -= l(i, p) * l(j, p);
            l(i, j) = (i == j) ? std::sqrt(s) : s / l(j, j);
        }
    }

    std::vector<VecN> edges;
    edges.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        VecN e(k);
        for (std::size_t j = 0; j < k; ++j) e[j] = l(i, j);
        edges.push_back(e);
    }
    return edges;
}

// Unit-edge regular n-simplex: n+1 vertices in E^n.
inline SimplexN regular_simplex(std::size_t n) {
    std::vector<VecN> vs{VecN(n)};
    for (const VecN& e : regular_simplex_edges(n)) vs.push_back(e);
    return SimplexN(std::move(vs));
}

// Unit-edge regular (n-1)-simplex embedded as n points in E^n
// (last coordinate zero, then translated).
inline SimplexN regular_facet(std::size_t n, double shift = 0.0) {
    std::vector<VecN> vs;
    VecN origin(n);
    for (std::size_t j = 0; j < n; ++j) origin[j] = shift;
    vs.push_back(origin);
    for (const VecN& e : regular_simplex_edges(n - 1)) {
        VecN v(n);
        for (std::size_t j = 0; j + 1 < n; ++j) v[j] = e[j] + shift;
        v[n - 1] = shift;
        vs.push_back(v);
    }
    return SimplexN(std::move(vs));
}

inline Vec3 random_vec3(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    return {d(rng), d(rng), d(rng)};
}

// Triangle with scale-free conditioning above the requested floor at
// every privileged-vertex choice.
inline Triangle3 random_triangle(std::mt19937_64& rng, double min_cond = 1e-6) {
    for (;;) {
        Triangle3 t{random_vec3(rng), random_vec3(rng), random_vec3(rng)};
        const SimplexN s({circum::to_vecn(t.A), circum::to_vecn(t.B), circum::to_vecn(t.C)});
        if (circum::conditioning_ratio(s) >= min_cond) return t;
    }
}

inline circum::Tetrahedron3 random_tetrahedron(std::mt19937_64& rng, double min_cond = 1e-6) {
    for (;;) {
        circum::Tetrahedron3 t{random_vec3(rng), random_vec3(rng), random_vec3(rng),
                               random_vec3(rng)};
        const SimplexN s({circum::to_vecn(t.V0), circum::to_vecn(t.V1), circum::to_vecn(t.V2),
                          circum::to_vecn(t.V3)});
        if (circum::conditioning_ratio(s) >= min_cond) return t;
    }
}

// Random rotation matrix columns via Gram-Schmidt.
struct Rotation3 {
    Vec3 c0, c1, c2;
    Vec3 apply(const Vec3& v) const { return v.x * c0 + v.y * c1 + v.z * c2; }
};

inline Rotation3 random_rotation(std::mt19937_64& rng) {
    using circum::cross;
    using circum::dot;
    using circum::norm;
    for (;;) {
        Vec3 u = random_vec3(rng);
        Vec3 v = random_vec3(rng);
        if (norm(u) < 0.1) continue;
        u = u / norm(u);
        v = v - dot(v, u) * u;
        if (norm(v) < 0.1) continue;
        v = v / norm(v);
        return {u, v, cross(u, v)};
    }
}

}  // namespace test_helpers
