#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "circum/errors.hpp"
#include "circum/vec3.hpp"

namespace circum {

// Dense real vector of fixed (run-time) dimension.
class VecN {
public:
    VecN() = default;
    explicit VecN(std::size_t n) : c_(n, 0.0) {}
    VecN(std::initializer_list<double> v) : c_(v) {}
    explicit VecN(std::vector<double> v) : c_(std::move(v)) {}

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }

    const std::vector<double>& data() const { return c_; }

    bool is_finite() const {
        for (double v : c_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    bool operator==(const VecN&) const = default;

private:
    std::vector<double> c_;
};

inline void require_same_dim(const VecN& a, const VecN& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("vector dimension mismatch");
}

inline VecN operator+(const VecN& a, const VecN& b) {
    require_same_dim(a, b);
    VecN r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline VecN operator-(const VecN& a, const VecN& b) {
    require_same_dim(a, b);
    VecN r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline VecN operator*(double s, const VecN& v) {
    VecN r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
    return r;
}

inline VecN operator/(const VecN& v, double s) {
    VecN r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i] / s;
    return r;
}

inline double dot(const VecN& a, const VecN& b) {
    require_same_dim(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_sq(const VecN& v) { return dot(v, v); }
inline double norm(const VecN& v) { return std::sqrt(norm_sq(v)); }

inline VecN to_vecn(const Vec3& v) { return VecN{v.x, v.y, v.z}; }

inline Vec3 to_vec3(const VecN& v) {
    if (v.dim() != 3) throw DimensionMismatch("expected a 3-vector");
    return {v[0], v[1], v[2]};
}

}  // namespace circum
