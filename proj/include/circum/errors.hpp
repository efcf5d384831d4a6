#pragma once

#include <stdexcept>
#include <string>

namespace circum {

// Base class for all geometric failures raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input shapes/dimensions do not match the operation's contract.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Triangle vertices are collinear or nearly so. Carries the squared
// norm of the edge cross product that failed the degeneracy check.
struct DegenerateTriangle : Error {
    double cross_norm_sq;
    explicit DegenerateTriangle(double cns)
        : Error("degenerate triangle: |a x b|^2 = " + std::to_string(cns)),
          cross_norm_sq(cns) {}
};

// Simplex vertices do not span the expected flat. Carries the signed
// volume-like measure (determinant or support-normal norm) that failed.
struct DegenerateSimplex : Error {
    double measure;
    explicit DegenerateSimplex(double m)
        : Error("degenerate simplex: measure = " + std::to_string(m)),
          measure(m) {}
};

// The linear solver hit a pivot below the singularity threshold.
struct SingularSystem : Error {
    double pivot;
    explicit SingularSystem(double p)
        : Error("singular system: pivot = " + std::to_string(p)), pivot(p) {}
};

// Scale-free degeneracy threshold applied to ratios such as
// |a x b|^2 / (|a|^2 |b|^2).
inline constexpr double kDegeneracyEps = 1e-12;

// Relative pivot threshold for the dense solver.
inline constexpr double kPivotEps = 1e-13;

}  // namespace circum
