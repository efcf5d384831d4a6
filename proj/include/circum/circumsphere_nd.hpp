#pragma once

#include <cstddef>
#include <vector>

#include "circum/sphere.hpp"
#include "circum/vecn.hpp"

namespace circum {

// Ordered vertex list V_0..V_{k-1} in E^n. A full simplex has k = n+1
// vertices (linear method); a facet simplex has k = n (projective method).
struct SimplexN {
    std::vector<VecN> vertices;

    SimplexN() = default;
    explicit SimplexN(std::vector<VecN> vs);

    std::size_t dim() const { return vertices.empty() ? 0 : vertices.front().dim(); }
    std::size_t count() const { return vertices.size(); }
};

// Hyperplane [normal : offset] in E^n, as an (n+1)-component homogeneous
// vector.
struct HomPlane {
    VecN normal;
    double offset = 0.0;

    VecN hom() const;
};

// The n-1 edge bisector hyperplanes plus the support hyperplane of the
// vertices' affine hull, in that order.
struct HyperplaneSet {
    std::vector<HomPlane> planes;
};

// Circumscribed hypersphere of a full simplex (n+1 points in E^n) via the
// linear system with rows 2(V_i - V_0) and right-hand side L^2_{i0}.
SphereN circumsphere_simplex_linear(const SimplexN& s);

// Bisector and support hyperplanes for a facet simplex (n points in E^n),
// in the frame where V_0 is translated to the origin.
HyperplaneSet build_hyperplanes(const SimplexN& s);

// Circumscribed hypersphere of a facet simplex, center constrained to the
// vertices' affine hull, via the extended cross product of the hyperplanes.
SphereN circumsphere_facet_projective(const SimplexN& s);

}  // namespace circum
