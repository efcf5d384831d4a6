#include "circum/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "circum/errors.hpp"

namespace circum {

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

namespace {

double det4(const SquareMatrix& m) {
    // First-row expansion over 3x3 cofactors, fixed order.
    const double m0 =
        det3(m(1, 1), m(1, 2), m(1, 3), m(2, 1), m(2, 2), m(2, 3), m(3, 1), m(3, 2), m(3, 3));
    const double m1 =
        det3(m(1, 0), m(1, 2), m(1, 3), m(2, 0), m(2, 2), m(2, 3), m(3, 0), m(3, 2), m(3, 3));
    const double m2 =
        det3(m(1, 0), m(1, 1), m(1, 3), m(2, 0), m(2, 1), m(2, 3), m(3, 0), m(3, 1), m(3, 3));
    const double m3 =
        det3(m(1, 0), m(1, 1), m(1, 2), m(2, 0), m(2, 1), m(2, 2), m(3, 0), m(3, 1), m(3, 2));
    return m(0, 0) * m0 - m(0, 1) * m1 + m(0, 2) * m2 - m(0, 3) * m3;
}

double det_lu(SquareMatrix m) {
    const std::size_t n = m.size();
    double d = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            d = -d;
        }
        const double p = m(k, k);
        if (p == 0.0) return 0.0;
        d *= p;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m(i, k) / p;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

}  // namespace

double det(const SquareMatrix& m) {
    switch (m.size()) {
        case 0:
            return 1.0;
        case 1:
            return m(0, 0);
        case 2:
            return det2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
        case 3:
            return det3(m(0, 0), m(0, 1), m(0, 2), m(1, 0), m(1, 1), m(1, 2), m(2, 0), m(2, 1),
                        m(2, 2));
        case 4:
            return det4(m);
        default:
            return det_lu(m);
    }
}

VecN solve(const SquareMatrix& m, const VecN& rhs) {
    const std::size_t n = m.size();
    if (rhs.dim() != n) throw DimensionMismatch("solve: rhs dimension mismatch");

    SquareMatrix a = m;
    VecN b = rhs;
    const double threshold = kPivotEps * m.max_abs();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (std::abs(a(piv, k)) <= threshold) throw SingularSystem(a(piv, k));
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            a(i, k) = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }

    VecN x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x[j];
        x[ii] = s / a(ii, ii);
    }
    return x;
}

VecN cross_nd(std::span<const VecN> rows) {
    const std::size_t k = rows.size();
    if (k == 0) throw DimensionMismatch("cross_nd: no input vectors");
    const std::size_t d = k + 1;
    for (const VecN& r : rows)
        if (r.dim() != d) throw DimensionMismatch("cross_nd: expected k vectors of dimension k+1");

    VecN result(d);
    SquareMatrix minor(k);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < d; ++c) {
                if (c == j) continue;
                minor(i, cc++) = rows[i][c];
            }
        }
        const double dj = det(minor);
        result[j] = (j % 2 == 0) ? dj : -dj;
    }
    return result;
}

}  // namespace circum
