#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "circum/vec3.hpp"
#include "circum/vecn.hpp"

namespace circum {

// Row-major square matrix.
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    // Largest absolute entry; the scale reference for pivot thresholds.
    double max_abs() const;

private:
    std::size_t n_;
    std::vector<double> a_;
};

// Fixed-order 2x2 and 3x3 cofactor expansions, shared by every small
// determinant in the library so evaluation order is reproducible.
inline double det2(double a, double b, double c, double d) { return a * d - b * c; }

inline double det3(double a, double b, double c,
                   double d, double e, double f,
                   double g, double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Determinant: direct cofactor formulas up to 4x4 (first-row expansion,
// fixed order), LU with partial pivoting above that.
double det(const SquareMatrix& m);

// Solve m*x = rhs by Gaussian elimination with partial pivoting.
// Throws SingularSystem when a pivot falls below kPivotEps * max_abs(m).
VecN solve(const SquareMatrix& m, const VecN& rhs);

// Extended cross product: given k vectors of dimension k+1, returns the
// formal cofactor expansion of the (k+1)x(k+1) determinant whose first row
// is the symbolic basis; component j carries sign (-1)^j (0-based).
// The result is orthogonal to every input.
VecN cross_nd(std::span<const VecN> rows);

// 4D extended cross product on homogeneous plane vectors [normal : d].
// Same cofactor order as cross_nd, hand-expanded for the E^3 hot path.
inline HomPoint3 cross4(const HomPlane3& p1, const HomPlane3& p2, const HomPlane3& p3) {
    const double a1 = p1.normal.x, b1 = p1.normal.y, c1 = p1.normal.z, d1 = p1.d;
    const double a2 = p2.normal.x, b2 = p2.normal.y, c2 = p2.normal.z, d2 = p2.d;
    const double a3 = p3.normal.x, b3 = p3.normal.y, c3 = p3.normal.z, d3 = p3.d;
    HomPoint3 q;
    q.coords.x = det3(b1, c1, d1, b2, c2, d2, b3, c3, d3);
    q.coords.y = -det3(a1, c1, d1, a2, c2, d2, a3, c3, d3);
    q.coords.z = det3(a1, b1, d1, a2, b2, d2, a3, b3, d3);
    q.w = -det3(a1, b1, c1, a2, b2, c2, a3, b3, c3);
    return q;
}

inline double dot4(const HomPoint3& q, const HomPlane3& p) {
    return dot(q.coords, p.normal) + q.w * p.d;
}

}  // namespace circum
