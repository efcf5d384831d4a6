#include "circum/circumsphere_nd.hpp"

#include <cmath>
#include <span>
#include <utility>

#include "circum/errors.hpp"
#include "circum/linalg.hpp"

namespace circum {

SimplexN::SimplexN(std::vector<VecN> vs) : vertices(std::move(vs)) {
    if (vertices.size() < 2) throw DimensionMismatch("simplex needs at least 2 vertices");
    const std::size_t n = vertices.front().dim();
    if (n < 2) throw DimensionMismatch("simplex dimension must be >= 2");
    if (vertices.size() > n + 1)
        throw DimensionMismatch("simplex has more than n+1 vertices");
    for (const VecN& v : vertices) {
        if (v.dim() != n) throw DimensionMismatch("inconsistent vertex dimensions");
        if (!v.is_finite()) throw DimensionMismatch("non-finite vertex coordinate");
    }
}

VecN HomPlane::hom() const {
    VecN h(normal.dim() + 1);
    for (std::size_t i = 0; i < normal.dim(); ++i) h[i] = normal[i];
    h[normal.dim()] = offset;
    return h;
}

SphereN circumsphere_simplex_linear(const SimplexN& s) {
    const std::size_t n = s.dim();
    if (s.count() != n + 1)
        throw DimensionMismatch("linear method needs n+1 vertices in E^n");

    SquareMatrix m(n);
    VecN b(n);
    for (std::size_t i = 0; i < n; ++i) {
        const VecN e = s.vertices[i + 1] - s.vertices[0];
        for (std::size_t j = 0; j < n; ++j) m(i, j) = 2.0 * e[j];
        b[i] = norm_sq(e);
    }

    VecN d(n);
    try {
        d = solve(m, b);
    } catch (const SingularSystem& e) {
        throw DegenerateSimplex(e.pivot);
    }
    return {s.vertices[0] + d, norm_sq(d)};
}

HyperplaneSet build_hyperplanes(const SimplexN& s) {
    const std::size_t n = s.dim();
    if (s.count() != n)
        throw DimensionMismatch("projective facet method needs n vertices in E^n");

    std::vector<VecN> edges;
    edges.reserve(n - 1);
    double edge_norm_prod = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        edges.push_back(s.vertices[i] - s.vertices[0]);
        edge_norm_prod *= norm(edges.back());
    }

    // Support normal: generalized cross product of the n-1 edge vectors.
    const VecN support = cross_nd(std::span<const VecN>(edges));
    if (!(norm(support) > kDegeneracyEps * edge_norm_prod))
        throw DegenerateSimplex(norm_sq(support));

    HyperplaneSet hs;
    hs.planes.reserve(n);
    for (const VecN& e : edges) hs.planes.push_back({e, -0.5 * norm_sq(e)});
    hs.planes.push_back({support, 0.0});
    return hs;
}

SphereN circumsphere_facet_projective(const SimplexN& s) {
    const HyperplaneSet hs = build_hyperplanes(s);
    const std::size_t n = s.dim();

    std::vector<VecN> rows;
    rows.reserve(n);
    double row_norm_prod = 1.0;
    for (const HomPlane& p : hs.planes) {
        rows.push_back(p.hom());
        row_norm_prod *= norm(rows.back());
    }

    const VecN q = cross_nd(std::span<const VecN>(rows));
    const double w = q[n];
    if (!(std::abs(w) > kDegeneracyEps * row_norm_prod)) throw DegenerateSimplex(w);

    VecN offset(n);
    for (std::size_t i = 0; i < n; ++i) offset[i] = q[i] / w;
    SphereN sphere{s.vertices[0] + offset, norm_sq(offset)};
    if (!sphere.center.is_finite() || !std::isfinite(sphere.radius_sq))
        throw DegenerateSimplex(w);
    return sphere;
}

}  // namespace circum
