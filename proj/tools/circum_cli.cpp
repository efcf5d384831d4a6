#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circum/bench.hpp"
#include "circum/circumsphere3.hpp"
#include "circum/circumsphere_nd.hpp"
#include "circum/errors.hpp"
#include "circum/generate.hpp"
#include "circum/io.hpp"
#include "circum/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitResidual = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAllDegenerate = 3;

constexpr double kVerifyTolerance = 1e-8;

using namespace circum;

Triangle3 as_triangle(const SimplexN& s) {
    return {to_vec3(s.vertices[0]), to_vec3(s.vertices[1]), to_vec3(s.vertices[2])};
}

Tetrahedron3 as_tetrahedron(const SimplexN& s) {
    return {to_vec3(s.vertices[0]), to_vec3(s.vertices[1]), to_vec3(s.vertices[2]),
            to_vec3(s.vertices[3])};
}

SphereN dispatch(Method m, const SimplexN& s) {
    switch (m) {
        case Method::standard:
            return to_sphere_n(circumsphere3_standard(as_triangle(s)));
        case Method::projective:
            return to_sphere_n(circumsphere3_projective(as_triangle(s)));
        case Method::tetra_closed:
            return to_sphere_n(circumsphere_tetrahedron_closed(as_tetrahedron(s)));
        case Method::linear:
            return circumsphere_simplex_linear(s);
        case Method::facet_projective:
            return circumsphere_facet_projective(s);
    }
    throw Error("unknown method");
}

void require_shape(Method m, const SimplexN& s, std::size_t dim) {
    const bool e3 = m == Method::standard || m == Method::projective || m == Method::tetra_closed;
    if (e3 && dim != 3) throw DimensionMismatch(to_string(m) + " requires dim 3");
    if (s.count() != vertices_for(m, dim))
        throw DimensionMismatch(to_string(m) + " needs " +
                                std::to_string(vertices_for(m, dim)) + " vertices per simplex");
}

int run_compute(Method method, const std::string& input, std::size_t dim, bool radius,
                const std::string& format) {
    const auto simplices = read_simplices_file(input, dim);
    if (simplices.empty()) {
        std::cerr << "no simplices in input\n";
        return kExitUsage;
    }

    struct Row {
        std::size_t index;
        std::string status;
        SphereN sphere;
        bool ok;
    };
    std::vector<Row> rows;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        require_shape(method, simplices[i], dim);
        try {
            rows.push_back({i, "ok", dispatch(method, simplices[i]), true});
        } catch (const DegenerateTriangle&) {
            rows.push_back({i, "degenerate-triangle", {}, false});
            ++failures;
        } catch (const DegenerateSimplex&) {
            rows.push_back({i, "degenerate-simplex", {}, false});
            ++failures;
        }
    }

    if (format == "csv") {
        std::ostringstream header;
        header << "index,status";
        for (std::size_t j = 0; j < dim; ++j) header << ",c" << j;
        header << ",r_sq";
        if (radius) header << ",r";
        std::cout << header.str() << '\n';
        for (const Row& r : rows) {
            std::cout << r.index << ',' << r.status;
            for (std::size_t j = 0; j < dim; ++j)
                std::cout << ',' << (r.ok ? format_double(r.sphere.center[j]) : "");
            std::cout << ',' << (r.ok ? format_double(r.sphere.radius_sq) : "");
            if (radius) std::cout << ',' << (r.ok ? format_double(r.sphere.radius()) : "");
            std::cout << '\n';
        }
    } else {
        nlohmann::json j;
        j["method"] = to_string(method);
        j["dim"] = dim;
        j["results"] = nlohmann::json::array();
        for (const Row& r : rows) {
            nlohmann::json e{{"index", r.index}, {"status", r.status}};
            if (r.ok) {
                e["center"] = r.sphere.center.data();
                e["r_sq"] = r.sphere.radius_sq;
                if (radius) e["r"] = r.sphere.radius();
            }
            j["results"].push_back(e);
        }
        std::cout << j.dump(2) << '\n';
    }

    return failures == simplices.size() ? kExitAllDegenerate : kExitOk;
}

int run_verify(const std::string& input, std::size_t dim) {
    const auto simplices = read_simplices_file(input, dim);
    if (simplices.empty()) {
        std::cerr << "no simplices in input\n";
        return kExitUsage;
    }

    std::size_t degenerate = 0;
    std::size_t breaches = 0;
    ResidualReport worst;

    for (const SimplexN& s : simplices) {
        const std::size_t k = s.count();
        ResidualReport rep;
        try {
            if (k == 3 && dim == 3) {
                const Triangle3 t = as_triangle(s);
                const Sphere3 std_s = circumsphere3_standard(t);
                const Sphere3 proj_s = circumsphere3_projective(t);
                const double oracle_r_sq = triangle_circumradius_oracle(t);
                rep.max_equidistance_rel =
                    std::max(equidistance_residual(to_sphere_n(std_s), s.vertices),
                             equidistance_residual(to_sphere_n(proj_s), s.vertices));
                rep.oracle_radius_rel_err =
                    std::max(std::abs(std_s.radius_sq - oracle_r_sq),
                             std::abs(proj_s.radius_sq - oracle_r_sq)) /
                    oracle_r_sq;
                rep.center_hull_residual = hull_residual(s, to_vecn(proj_s.center));
            } else if (k == dim + 1) {
                const SphereN sp = circumsphere_simplex_linear(s);
                rep.max_equidistance_rel = equidistance_residual(sp, s.vertices);
                if (dim == 3) {
                    const Tetrahedron3 t = as_tetrahedron(s);
                    const SphereN closed = to_sphere_n(circumsphere_tetrahedron_closed(t));
                    rep.max_equidistance_rel = std::max(
                        rep.max_equidistance_rel, equidistance_residual(closed, s.vertices));
                    rep.cayley_menger_rel = cayley_menger_residual(t, closed.radius_sq);
                }
            } else if (k == dim) {
                const SphereN sp = circumsphere_facet_projective(s);
                const SphereN ref = constrained_lsq_reference(s);
                rep.max_equidistance_rel = equidistance_residual(sp, s.vertices);
                rep.oracle_radius_rel_err =
                    std::abs(sp.radius_sq - ref.radius_sq) / ref.radius_sq;
                rep.center_hull_residual = hull_residual(s, sp.center);
            } else {
                std::cerr << "unsupported vertex count " << k << " for dim " << dim << '\n';
                return kExitUsage;
            }
        } catch (const Error&) {
            ++degenerate;
            continue;
        }

        worst.max_equidistance_rel = std::max(worst.max_equidistance_rel, rep.max_equidistance_rel);
        worst.cayley_menger_rel = std::max(worst.cayley_menger_rel, rep.cayley_menger_rel);
        worst.oracle_radius_rel_err =
            std::max(worst.oracle_radius_rel_err, rep.oracle_radius_rel_err);
        worst.center_hull_residual =
            std::max(worst.center_hull_residual, rep.center_hull_residual);
        if (rep.max_equidistance_rel > kVerifyTolerance ||
            rep.cayley_menger_rel > kVerifyTolerance ||
            rep.oracle_radius_rel_err > kVerifyTolerance ||
            rep.center_hull_residual > kVerifyTolerance)
            ++breaches;
    }

    std::cout << "verified " << simplices.size() - degenerate << "/" << simplices.size()
              << " simplices (" << degenerate << " degenerate)\n"
              << "max equidistance residual:   " << format_double(worst.max_equidistance_rel) << '\n'
              << "max cayley-menger residual:  " << format_double(worst.cayley_menger_rel) << '\n'
              << "max oracle radius rel err:   " << format_double(worst.oracle_radius_rel_err) << '\n'
              << "max center hull residual:    " << format_double(worst.center_hull_residual) << '\n'
              << "breaches (> " << kVerifyTolerance << "): " << breaches << '\n';

    if (degenerate == simplices.size()) return kExitAllDegenerate;
    return breaches == 0 ? kExitOk : kExitResidual;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circumscribed sphere computation and benchmarking"};
    app.require_subcommand(1);

    std::string method_str = "standard";
    std::string family_str = "uniform";
    std::string input;
    std::string output = "csv";
    std::size_t dim = 3;
    std::size_t count = 100000;
    std::uint64_t seed = 1;
    bool radius = false;

    auto* compute = app.add_subcommand("compute", "compute circumspheres from an input file");
    compute->add_option("--method", method_str, "method")->required();
    compute->add_option("--input", input, "input file")->required();
    compute->add_option("--dim", dim, "space dimension");
    compute->add_flag("--radius", radius, "also output the radius (takes the square root)");
    compute->add_option("--output", output, "csv or json");

    auto* bench = app.add_subcommand("bench", "generate inputs and time the methods");
    bench->add_option("--method", method_str, "comma-separated method list")->required();
    bench->add_option("--family", family_str, "uniform, needle or cap");
    bench->add_option("--count", count, "batch size");
    bench->add_option("--dim", dim, "space dimension");
    bench->add_option("--seed", seed, "RNG seed");
    bench->add_flag("--radius", radius, "time the sqrt-inclusive path");
    bench->add_option("--output", output, "csv or json");

    auto* verify = app.add_subcommand("verify", "run the oracle suite over an input file");
    verify->add_option("--input", input, "input file")->required();
    verify->add_option("--dim", dim, "space dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (output != "csv" && output != "json") {
        std::cerr << "unknown output format: " << output << '\n';
        return kExitUsage;
    }

    try {
        if (compute->parsed()) {
            const auto m = parse_method(method_str);
            if (!m) {
                std::cerr << "unknown method: " << method_str << '\n';
                return kExitUsage;
            }
            return run_compute(*m, input, dim, radius, output);
        }
        if (bench->parsed()) {
            BenchConfig cfg;
            std::istringstream ms(method_str);
            std::string tok;
            while (std::getline(ms, tok, ',')) {
                const auto m = parse_method(tok);
                if (!m) {
                    std::cerr << "unknown method: " << tok << '\n';
                    return kExitUsage;
                }
                cfg.methods.push_back(*m);
            }
            const auto fam = parse_family(family_str);
            if (!fam || cfg.methods.empty() || count == 0 || dim < 2) {
                std::cerr << "invalid bench configuration\n";
                return kExitUsage;
            }
            cfg.family = *fam;
            cfg.count = count;
            cfg.dim = dim;
            cfg.seed = seed;
            cfg.compute_radius = radius;
            const BenchReport report = run_bench(cfg);
            std::cout << (output == "csv" ? emit_csv(report) : emit_json(report));
            return kExitOk;
        }
        return run_verify(input, dim);
    } catch (const DimensionMismatch& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
}
