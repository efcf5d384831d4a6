#include <doctest.h>

#include <sstream>

#include "circum/bench.hpp"
#include "circum/circumsphere3.hpp"
#include "circum/errors.hpp"
#include "circum/generate.hpp"
#include "circum/io.hpp"
#include "circum/oracle.hpp"

using namespace circum;

TEST_CASE("generation is deterministic for a fixed seed") {
    BenchConfig cfg;
    cfg.methods = {Method::standard};
    cfg.count = 10;
    cfg.seed = 12345;
    const auto a = generate_inputs(cfg);
    const auto b = generate_inputs(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t v = 0; v < a[i].count(); ++v)
            CHECK(a[i].vertices[v] == b[i].vertices[v]);
}

TEST_CASE("uniform family respects the conditioning floor") {
    BenchConfig cfg;
    cfg.methods = {Method::linear};
    cfg.dim = 4;
    cfg.count = 500;
    cfg.seed = 2;
    for (const SimplexN& s : generate_inputs(cfg))
        CHECK(conditioning_ratio(s) >= 1e-6);
}

TEST_CASE("needle family hits the documented conditioning window at k=6") {
    BenchConfig cfg;
    cfg.methods = {Method::standard};
    cfg.family = Family::needle;
    cfg.count = 240;
    cfg.seed = 3;
    const auto inputs = generate_inputs(cfg);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (i % 12 != 5) continue;  // k = 6 instances
        const double cond = conditioning_ratio(inputs[i]);
        CHECK(cond >= 1e-14);
        CHECK(cond <= 1e-10);
    }
}

TEST_CASE("generation input validation") {
    BenchConfig bad;
    bad.methods = {Method::standard, Method::tetra_closed};
    CHECK_THROWS_AS(generate_inputs(bad), DimensionMismatch);

    BenchConfig wrong_dim;
    wrong_dim.methods = {Method::projective};
    wrong_dim.dim = 4;
    CHECK_THROWS_AS(generate_inputs(wrong_dim), DimensionMismatch);

    BenchConfig needle_nd;
    needle_nd.methods = {Method::linear};
    needle_nd.family = Family::needle;
    needle_nd.dim = 4;
    CHECK_THROWS_AS(generate_inputs(needle_nd), DimensionMismatch);
}

TEST_CASE("all methods stay accurate on the needle family up to k=4") {
    BenchConfig cfg;
    cfg.methods = {Method::standard, Method::projective, Method::facet_projective};
    cfg.family = Family::needle;
    cfg.count = 480;
    cfg.seed = 4;
    const auto inputs = generate_inputs(cfg);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (i % 12 + 1 > 4) continue;  // keep k <= 4
        const SimplexN& s = inputs[i];
        const Triangle3 t{to_vec3(s.vertices[0]), to_vec3(s.vertices[1]),
                          to_vec3(s.vertices[2])};
        CHECK(equidistance_residual(to_sphere_n(circumsphere3_standard(t)), s.vertices) <= 1e-8);
        CHECK(equidistance_residual(to_sphere_n(circumsphere3_projective(t)), s.vertices) <=
              1e-8);
        CHECK(equidistance_residual(circumsphere_facet_projective(s), s.vertices) <= 1e-8);
    }
}

TEST_CASE("minimal bench run and timing sanity") {
    BenchConfig cfg;
    cfg.methods = {Method::standard, Method::projective};
    cfg.count = 200;
    cfg.seed = 5;
    const BenchReport report = run_bench(cfg);
    REQUIRE(report.rows.size() == 2);
    for (const MethodStats& r : report.rows) {
        CHECK(r.ns_op_median > 0.0);
        CHECK(r.ns_op_p10 <= r.ns_op_median);
        CHECK(r.ns_op_median <= r.ns_op_p90);
        CHECK(r.failures == 0);
        CHECK(r.max_resid <= 1e-8);
    }
    CHECK(report.rows[0].speedup_vs_standard == 1.0);
    CHECK(report.rows[1].speedup_vs_standard > 0.0);
}

TEST_CASE("single-instance run emits a valid one-row CSV") {
    BenchConfig cfg;
    cfg.methods = {Method::standard};
    cfg.count = 1;
    cfg.seed = 6;
    const std::string csv = emit_csv(run_bench(cfg));
    std::istringstream in(csv);
    std::string header, row, extra;
    CHECK(std::getline(in, header));
    CHECK(header == kCsvHeader);
    CHECK(std::getline(in, row));
    CHECK_FALSE(std::getline(in, extra));
}

TEST_CASE("report round-trips through CSV and JSON") {
    BenchConfig cfg;
    cfg.methods = {Method::standard, Method::projective};
    cfg.count = 100;
    cfg.seed = 7;
    const BenchReport report = run_bench(cfg);

    const BenchReport via_csv = parse_csv(emit_csv(report));
    const BenchReport via_json = parse_json(emit_json(report));
    REQUIRE(via_csv.rows.size() == report.rows.size());
    REQUIRE(via_json.rows.size() == report.rows.size());
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        for (const BenchReport* parsed : {&via_csv, &via_json}) {
            const MethodStats& a = report.rows[i];
            const MethodStats& b = parsed->rows[i];
            CHECK(a.method == b.method);
            CHECK(a.ns_op_median == b.ns_op_median);
            CHECK(a.ns_op_p10 == b.ns_op_p10);
            CHECK(a.ns_op_p90 == b.ns_op_p90);
            CHECK(a.max_resid == b.max_resid);
            CHECK(a.mean_resid == b.mean_resid);
            CHECK(a.failures == b.failures);
            CHECK(a.speedup_vs_standard == b.speedup_vs_standard);
        }
    }
    CHECK(via_csv.count == report.count);
    CHECK(via_csv.seed == report.seed);
}

TEST_CASE("identical seeds give identical residual statistics") {
    BenchConfig cfg;
    cfg.methods = {Method::projective};
    cfg.count = 500;
    cfg.seed = 99;
    const BenchReport a = run_bench(cfg);
    const BenchReport b = run_bench(cfg);
    CHECK(a.rows[0].max_resid == b.rows[0].max_resid);
    CHECK(a.rows[0].mean_resid == b.rows[0].mean_resid);
    CHECK(a.rows[0].failures == b.rows[0].failures);
}

TEST_CASE("simplex file parsing") {
    std::istringstream in(
        "# triangle\n"
        "1 0 0  0 1 0  0 0 0\n"
        "\n"
        "0 0 0  1 0 0  0 1 0  0 0 1  # corner tetrahedron\n");
    const auto simplices = read_simplices(in, 3);
    REQUIRE(simplices.size() == 2);
    CHECK(simplices[0].count() == 3);
    CHECK(simplices[1].count() == 4);
    CHECK(simplices[1].vertices[3][2] == 1.0);

    std::istringstream bad("1 2 3 4\n");
    CHECK_THROWS_AS(read_simplices(bad, 3), DimensionMismatch);
    std::istringstream nan_in("1 2 nan\n");
    CHECK_THROWS_AS(read_simplices(nan_in, 3), DimensionMismatch);
}
