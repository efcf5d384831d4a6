#pragma once

#include <vector>

#include "circum/circumsphere3.hpp"
#include "circum/circumsphere_nd.hpp"
#include "circum/sphere.hpp"

namespace circum {

// Scale-free residual summary for one verified instance.
struct ResidualReport {
    double max_equidistance_rel = 0.0;
    double cayley_menger_rel = 0.0;
    double oracle_radius_rel_err = 0.0;
    double center_hull_residual = 0.0;
};

// max_i | |Q - V_i|^2 - r^2 | / max(r^2, eps).
double equidistance_residual(const SphereN& s, const std::vector<VecN>& vertices);
double equidistance_residual(const Sphere3& s, const std::vector<Vec3>& vertices);

// Bordered 6x6 determinant in the pairwise squared edge lengths and r^2,
// normalized by the product of the row max-norms. Vanishes (up to rounding)
// exactly when r^2 is the squared circumradius of the tetrahedron.
double cayley_menger_residual(const Tetrahedron3& tet, double r_sq);

// Classical r^2 = (a^2 b^2 c^2) / (16 K^2) with K the triangle area.
// Independent of all circumsphere code paths above.
double triangle_circumradius_oracle(const Triangle3& t);

// Reference solution over the edge basis: parameterize the center as
// V_0 plus a combination of the edge vectors and solve the reduced Gram
// system. Accepts 2..n+1 vertices; the k = n+1 case coincides with the
// linear method. Test oracle only.
SphereN constrained_lsq_reference(const SimplexN& s);

// Distance from a point to the affine hull of the simplex vertices,
// relative to the point's offset from V_0 (0 when the point is on the hull).
double hull_residual(const SimplexN& s, const VecN& point);

}  // namespace circum
