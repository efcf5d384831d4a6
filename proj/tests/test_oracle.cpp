#include <doctest.h>

#include <cmath>
#include <random>

#include "circum/circumsphere3.hpp"
#include "circum/circumsphere_nd.hpp"
#include "circum/oracle.hpp"
#include "helpers.hpp"

using namespace circum;
using test_helpers::random_tetrahedron;
using test_helpers::random_triangle;

TEST_CASE("equidistance residual detects injected errors") {
    const std::vector<Vec3> corner{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const Sphere3 exact{{0.5, 0.5, 0.5}, 0.75};
    CHECK(equidistance_residual(exact, corner) <= 1e-15);

    Sphere3 off = exact;
    off.radius_sq += 1e-3;
    CHECK(equidistance_residual(off, corner) > 1e-4);
}

TEST_CASE("equidistance residual of pipeline outputs") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 1000; ++i) {
        const Triangle3 t = random_triangle(rng);
        CHECK(equidistance_residual(circumsphere3_standard(t), {t.A, t.B, t.C}) <= 1e-9);
    }
}

TEST_CASE("cayley-menger vanishes at the true circumradius") {
    const auto reg = test_helpers::regular_simplex(3);
    const Tetrahedron3 rt{to_vec3(reg.vertices[0]), to_vec3(reg.vertices[1]),
                          to_vec3(reg.vertices[2]), to_vec3(reg.vertices[3])};
    CHECK(cayley_menger_residual(rt, 3.0 / 8.0) <= 1e-10);
    CHECK(cayley_menger_residual(rt, 1.0) > 1e-3);
}

TEST_CASE("cayley-menger residual of pipeline outputs") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const Tetrahedron3 t = random_tetrahedron(rng);
        const Sphere3 s = circumsphere_tetrahedron_closed(t);
        CHECK(cayley_menger_residual(t, s.radius_sq) <= 1e-8);
    }
}

TEST_CASE("cayley-menger residual grows with the perturbation") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        const Tetrahedron3 t = random_tetrahedron(rng);
        const double r_sq = circumsphere_tetrahedron_closed(t).radius_sq;
        const double base = cayley_menger_residual(t, r_sq);
        for (const double sign : {1.0, -1.0}) {
            const double small = cayley_menger_residual(t, r_sq * (1.0 + sign * 1e-3));
            const double large = cayley_menger_residual(t, r_sq * (1.0 + sign * 1e-1));
            CHECK(small > base);
            CHECK(large > small);
        }
    }
}

TEST_CASE("triangle circumradius oracle on known triangles") {
    CHECK(triangle_circumradius_oracle({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}) ==
          doctest::Approx(0.5));
    CHECK(triangle_circumradius_oracle(
              {{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2, 0}}) ==
          doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(triangle_circumradius_oracle({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}),
                    DegenerateTriangle);
}

TEST_CASE("triangle circumradius oracle is exactly permutation invariant") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 200; ++i) {
        const Triangle3 t = random_triangle(rng);
        const double base = triangle_circumradius_oracle(t);
        CHECK(triangle_circumradius_oracle({t.B, t.C, t.A}) ==
              doctest::Approx(base).epsilon(1e-14));
        CHECK(triangle_circumradius_oracle({t.C, t.A, t.B}) ==
              doctest::Approx(base).epsilon(1e-14));
    }
}

TEST_CASE("constrained reference matches the direct methods") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 500; ++i) {
        const Triangle3 t = random_triangle(rng);
        const SimplexN s({to_vecn(t.A), to_vecn(t.B), to_vecn(t.C)});
        const SphereN ref = constrained_lsq_reference(s);
        const Sphere3 proj = circumsphere3_projective({t.B, t.C, t.A});
        CHECK(std::abs(ref.radius_sq - proj.radius_sq) <= 1e-10 * proj.radius_sq);
    }

    // Full triangle in the plane: matches the linear method.
    const SimplexN tri2(std::vector<VecN>{{0, 0}, {1, 0}, {0, 1}});
    const SphereN tri2_ref = constrained_lsq_reference(tri2);
    const SphereN tri2_lin = circumsphere_simplex_linear(tri2);
    CHECK(norm(tri2_ref.center - tri2_lin.center) <= 1e-12);
    CHECK(tri2_ref.radius_sq == doctest::Approx(tri2_lin.radius_sq).epsilon(1e-12));

    const SimplexN seg(std::vector<VecN>{{0.0, 0.0}, {2.0, 0.0}});
    const SphereN seg_ref = constrained_lsq_reference(seg);
    CHECK(seg_ref.center[0] == doctest::Approx(1.0));
    CHECK(seg_ref.radius_sq == doctest::Approx(1.0));

    CHECK_THROWS_AS(
        constrained_lsq_reference(SimplexN(std::vector<VecN>{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}})),
        DegenerateSimplex);
}

TEST_CASE("hull residual separates on- and off-hull points") {
    const SimplexN facet(std::vector<VecN>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    CHECK(hull_residual(facet, VecN{0.3, 0.4, 0.0}) <= 1e-14);
    CHECK(hull_residual(facet, VecN{0.3, 0.4, 1.0}) > 0.5);
}
