#pragma once

#include <cmath>

#include "circum/vec3.hpp"
#include "circum/vecn.hpp"

namespace circum {

// Sphere stored as center plus squared radius. The square root is costly
// enough to matter in batch workloads, so it is only taken on demand.
template <class Point>
struct Sphere {
    Point center;
    double radius_sq = 0.0;

    double radius() const { return std::sqrt(radius_sq); }
};

using Sphere3 = Sphere<Vec3>;
using SphereN = Sphere<VecN>;

inline SphereN to_sphere_n(const Sphere3& s) { return {to_vecn(s.center), s.radius_sq}; }
inline const SphereN& to_sphere_n(const SphereN& s) { return s; }

}  // namespace circum
