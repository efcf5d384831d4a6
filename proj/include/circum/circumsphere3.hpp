#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "circum/errors.hpp"
#include "circum/linalg.hpp"
#include "circum/sphere.hpp"
#include "circum/vec3.hpp"

namespace circum {

struct Triangle3 {
    Vec3 A, B, C;
};

struct Tetrahedron3 {
    Vec3 V0, V1, V2, V3;
};

// Squared edge lengths from vertex 0 plus the signed volume
// (volume is the 1/6-determinant for four vertices in E^3, 0 otherwise).
struct SimplexMetrics {
    std::vector<double> edge_lengths_sq;
    double volume = 0.0;
};

inline void check_nondegenerate(double cross_sq, double aa, double bb) {
    if (!(cross_sq > kDegeneracyEps * aa * bb)) throw DegenerateTriangle(cross_sq);
}

// Standard vector formula: the triangle is translated so C sits at the
// origin, the center follows from the two edge vectors.
inline Sphere3 circumsphere3_standard(const Triangle3& t) {
    const Vec3 a = t.A - t.C;
    const Vec3 b = t.B - t.C;
    const Vec3 ab = cross(a, b);
    const double ab_sq = norm_sq(ab);
    const double aa = norm_sq(a);
    const double bb = norm_sq(b);
    check_nondegenerate(ab_sq, aa, bb);

    const Vec3 q = cross(aa * b - bb * a, ab) / (2.0 * ab_sq);
    const double r_sq = aa * bb * norm_sq(a - b) / (4.0 * ab_sq);
    Sphere3 s{t.C + q, r_sq};
    if (!is_finite(s.center) || !std::isfinite(s.radius_sq)) throw DegenerateTriangle(ab_sq);
    return s;
}

// Plane through the edge midpoint with the edge as its normal, in the
// frame where the shared vertex is the origin: [edge : -(edge.edge)/2].
inline HomPlane3 bisector_plane(const Vec3& edge) {
    const double ee = norm_sq(edge);
    if (!(ee > 0.0)) throw DegenerateTriangle(ee);
    return {edge, -0.5 * ee};
}

// Plane of the triangle itself, through the translated origin: [a x b : 0].
inline HomPlane3 support_plane(const Vec3& a, const Vec3& b) {
    const Vec3 n = cross(a, b);
    check_nondegenerate(norm_sq(n), norm_sq(a), norm_sq(b));
    return {n, 0.0};
}

// Homogeneous circumcenter of the translated triangle, oriented so that
// q.w equals +|a x b|^2. The raw cofactor expansion with row order
// (rho_A, rho_B, rho_0) yields q.w = -|a x b|^2; the overall sign of a
// homogeneous point is free, so the result is flipped to the positive
// orientation.
inline HomPoint3 circumcenter3_projective_hom(const Triangle3& t) {
    const Vec3 a = t.A - t.C;
    const Vec3 b = t.B - t.C;
    const Vec3 ab = cross(a, b);
    check_nondegenerate(norm_sq(ab), norm_sq(a), norm_sq(b));

    const HomPoint3 q = cross4({a, -0.5 * norm_sq(a)}, {b, -0.5 * norm_sq(b)}, {ab, 0.0});
    return {-q.coords, -q.w};
}

// Projective method: intersect the two edge bisector planes with the
// triangle's own plane via the 4D extended cross product.
inline Sphere3 circumsphere3_projective(const Triangle3& t) {
    const Vec3 a = t.A - t.C;
    const Vec3 b = t.B - t.C;
    const Vec3 ab = cross(a, b);
    const double ab_sq = norm_sq(ab);
    check_nondegenerate(ab_sq, norm_sq(a), norm_sq(b));

    const HomPoint3 q = cross4({a, -0.5 * norm_sq(a)}, {b, -0.5 * norm_sq(b)}, {ab, 0.0});
    // q.w = -|a x b|^2 up to rounding; the homogeneous division absorbs
    // the sign. r^2 comes straight off the homogeneous tuple.
    const double r_sq = norm_sq(q.coords) / (q.w * q.w);
    Sphere3 s{t.C + q.coords / q.w, r_sq};
    if (!is_finite(s.center) || !std::isfinite(s.radius_sq)) throw DegenerateTriangle(ab_sq);
    return s;
}

// Closed-form tetrahedron circumsphere: Cramer expansion of the
// edge-vector system, scaled by 1/(2 det) = 1/(12 D).
inline Sphere3 circumsphere_tetrahedron_closed(const Tetrahedron3& t) {
    const Vec3 x1 = t.V1 - t.V0;
    const Vec3 x2 = t.V2 - t.V0;
    const Vec3 x3 = t.V3 - t.V0;
    const double l1 = norm_sq(x1);
    const double l2 = norm_sq(x2);
    const double l3 = norm_sq(x3);

    const double d = det3(x1.x, x1.y, x1.z, x2.x, x2.y, x2.z, x3.x, x3.y, x3.z);
    const double scale_cubed = std::sqrt(l1 * l2 * l3);
    if (!(std::abs(d) > kDegeneracyEps * scale_cubed)) throw DegenerateSimplex(d / 6.0);

    const double f = 1.0 / (2.0 * d);
    Vec3 q;
    q.x = f * ((x2.y * x3.z - x3.y * x2.z) * l1 - (x1.y * x3.z - x3.y * x1.z) * l2 +
               (x1.y * x2.z - x2.y * x1.z) * l3);
    q.y = f * (-(x2.x * x3.z - x3.x * x2.z) * l1 + (x1.x * x3.z - x3.x * x1.z) * l2 -
               (x1.x * x2.z - x2.x * x1.z) * l3);
    q.z = f * ((x2.x * x3.y - x3.x * x2.y) * l1 - (x1.x * x3.y - x3.x * x1.y) * l2 +
               (x1.x * x2.y - x2.x * x1.y) * l3);

    Sphere3 s{t.V0 + q, norm_sq(q)};
    if (!is_finite(s.center) || !std::isfinite(s.radius_sq)) throw DegenerateSimplex(d / 6.0);
    return s;
}

inline SimplexMetrics simplex_metrics(const std::vector<Vec3>& vertices) {
    if (vertices.size() < 2) throw DimensionMismatch("simplex_metrics: need at least 2 vertices");
    SimplexMetrics m;
    m.edge_lengths_sq.reserve(vertices.size() - 1);
    for (std::size_t i = 1; i < vertices.size(); ++i)
        m.edge_lengths_sq.push_back(norm_sq(vertices[i] - vertices[0]));
    if (vertices.size() == 4) {
        const Vec3 x1 = vertices[1] - vertices[0];
        const Vec3 x2 = vertices[2] - vertices[0];
        const Vec3 x3 = vertices[3] - vertices[0];
        m.volume =
            det3(x1.x, x1.y, x1.z, x2.x, x2.y, x2.z, x3.x, x3.y, x3.z) / 6.0;
    }
    return m;
}

}  // namespace circum
