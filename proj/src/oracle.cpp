#include "circum/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "circum/errors.hpp"
#include "circum/linalg.hpp"

namespace circum {

namespace {
constexpr double kTinyScale = 1e-300;
}

double equidistance_residual(const SphereN& s, const std::vector<VecN>& vertices) {
    double worst = 0.0;
    for (const VecN& v : vertices)
        worst = std::max(worst, std::abs(norm_sq(s.center - v) - s.radius_sq));
    return worst / std::max(s.radius_sq, kTinyScale);
}

double equidistance_residual(const Sphere3& s, const std::vector<Vec3>& vertices) {
    double worst = 0.0;
    for (const Vec3& v : vertices)
        worst = std::max(worst, std::abs(norm_sq(s.center - v) - s.radius_sq));
    return worst / std::max(s.radius_sq, kTinyScale);
}

double cayley_menger_residual(const Tetrahedron3& tet, double r_sq) {
    const double l10 = norm_sq(tet.V1 - tet.V0);
    const double l20 = norm_sq(tet.V2 - tet.V0);
    const double l30 = norm_sq(tet.V3 - tet.V0);
    const double l21 = norm_sq(tet.V2 - tet.V1);
    const double l31 = norm_sq(tet.V3 - tet.V1);
    const double l32 = norm_sq(tet.V3 - tet.V2);

    const double rows[6][6] = {
        {0.0, 1.0, 1.0, 1.0, 1.0, 1.0},
        {1.0, 0.0, l10, l20, l30, r_sq},
        {1.0, l10, 0.0, l21, l31, r_sq},
        {1.0, l20, l21, 0.0, l32, r_sq},
        {1.0, l30, l31, l32, 0.0, r_sq},
        {1.0, r_sq, r_sq, r_sq, r_sq, 0.0},
    };

    SquareMatrix m(6);
    double norm_prod = 1.0;
    for (int i = 0; i < 6; ++i) {
        double row_max = 0.0;
        for (int j = 0; j < 6; ++j) {
            m(i, j) = rows[i][j];
            row_max = std::max(row_max, std::abs(rows[i][j]));
        }
        norm_prod *= std::max(row_max, kTinyScale);
    }
    return std::abs(det(m)) / norm_prod;
}

double triangle_circumradius_oracle(const Triangle3& t) {
    const double a_sq = norm_sq(t.B - t.C);
    const double b_sq = norm_sq(t.C - t.A);
    const double c_sq = norm_sq(t.A - t.B);
    const double four_k_sq = norm_sq(cross(t.B - t.A, t.C - t.A));
    if (!(four_k_sq > kDegeneracyEps * b_sq * c_sq)) throw DegenerateTriangle(four_k_sq);
    return a_sq * b_sq * c_sq / (4.0 * four_k_sq);
}

SphereN constrained_lsq_reference(const SimplexN& s) {
    const std::size_t n = s.dim();
    const std::size_t k = s.count();
    if (k < 2 || k > n + 1)
        throw DimensionMismatch("constrained reference needs at most n+1 vertices");

    const std::size_t m = k - 1;
    std::vector<VecN> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < k; ++i) edges.push_back(s.vertices[i] - s.vertices[0]);

    SquareMatrix gram(m);
    VecN rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) gram(i, j) = 2.0 * dot(edges[i], edges[j]);
        rhs[i] = norm_sq(edges[i]);
    }

    VecN t(m);
    try {
        t = solve(gram, rhs);
    } catch (const SingularSystem& e) {
        throw DegenerateSimplex(e.pivot);
    }

    VecN offset(n);
    for (std::size_t j = 0; j < m; ++j) offset = offset + t[j] * edges[j];
    return {s.vertices[0] + offset, norm_sq(offset)};
}

double hull_residual(const SimplexN& s, const VecN& point) {
    const std::size_t n = s.dim();
    const std::size_t k = s.count();
    const std::size_t m = k - 1;
    std::vector<VecN> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < k; ++i) edges.push_back(s.vertices[i] - s.vertices[0]);

    const VecN offset = point - s.vertices[0];
    SquareMatrix gram(m);
    VecN rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) gram(i, j) = dot(edges[i], edges[j]);
        rhs[i] = dot(edges[i], offset);
    }

    VecN c(m);
    try {
        c = solve(gram, rhs);
    } catch (const SingularSystem& e) {
        throw DegenerateSimplex(e.pivot);
    }

    VecN proj(n);
    for (std::size_t j = 0; j < m; ++j) proj = proj + c[j] * edges[j];
    return norm(offset - proj) / std::max(norm(offset), kTinyScale);
}

}  // namespace circum
