#include "circum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "circum/circumsphere3.hpp"
#include "circum/circumsphere_nd.hpp"
#include "circum/errors.hpp"
#include "circum/oracle.hpp"

namespace circum {

namespace {

inline void do_not_optimize(double& v) {
    asm volatile("" : "+r"(v) : : "memory");
}

Triangle3 to_triangle(const SimplexN& s) {
    return {to_vec3(s.vertices[0]), to_vec3(s.vertices[1]), to_vec3(s.vertices[2])};
}

Tetrahedron3 to_tetrahedron(const SimplexN& s) {
    return {to_vec3(s.vertices[0]), to_vec3(s.vertices[1]), to_vec3(s.vertices[2]),
            to_vec3(s.vertices[3])};
}

struct Timing {
    double median = 0.0;
    double p10 = 0.0;
    double p90 = 0.0;
};

// 3 warm-up passes, 9 timed repetitions of the whole batch; per-op times
// in nanoseconds at the 10/50/90 percentiles of the repetitions.
template <class Inputs, class Op>
Timing time_batch(const Inputs& xs, Op&& op, bool with_radius) {
    using clock = std::chrono::steady_clock;
    constexpr int kWarmups = 3;
    constexpr int kReps = 9;

    double sink = 0.0;
    auto pass = [&] {
        for (const auto& x : xs) {
            const auto s = op(x);
            sink += with_radius ? s.radius() : s.radius_sq;
        }
        do_not_optimize(sink);
    };

    for (int i = 0; i < kWarmups; ++i) pass();

    std::vector<double> per_op(kReps);
    for (int r = 0; r < kReps; ++r) {
        const auto t0 = clock::now();
        pass();
        const auto t1 = clock::now();
        const double ns =
            static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        per_op[r] = ns / static_cast<double>(xs.size());
    }
    std::sort(per_op.begin(), per_op.end());
    return {per_op[4], per_op[0], per_op[7]};
}

template <class Input, class Op>
MethodStats bench_method(Method m, const std::vector<SimplexN>& generated,
                         Op&& op, auto&& convert, bool with_radius) {
    MethodStats st;
    st.method = m;

    std::vector<Input> ok;
    ok.reserve(generated.size());
    std::vector<const SimplexN*> ok_src;
    for (const SimplexN& s : generated) {
        Input in = convert(s);
        try {
            (void)op(in);
        } catch (const Error&) {
            ++st.failures;
            continue;
        }
        ok.push_back(std::move(in));
        ok_src.push_back(&s);
    }

    double sum_resid = 0.0;
    for (std::size_t i = 0; i < ok.size(); ++i) {
        const SphereN sn = to_sphere_n(op(ok[i]));
        const double resid = equidistance_residual(sn, ok_src[i]->vertices);
        st.max_resid = std::max(st.max_resid, resid);
        sum_resid += resid;
    }
    if (!ok.empty()) st.mean_resid = sum_resid / static_cast<double>(ok.size());

    if (!ok.empty()) {
        const Timing t = time_batch(ok, op, with_radius);
        st.ns_op_median = t.median;
        st.ns_op_p10 = t.p10;
        st.ns_op_p90 = t.p90;
    }
    return st;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
    const std::vector<SimplexN> inputs = generate_inputs(cfg);

    BenchReport report;
    report.family = cfg.family;
    report.dim = cfg.dim;
    report.count = cfg.count;
    report.seed = cfg.seed;
    report.compute_radius = cfg.compute_radius;

    for (Method m : cfg.methods) {
        switch (m) {
            case Method::standard:
                report.rows.push_back(bench_method<Triangle3>(
                    m, inputs, [](const Triangle3& t) { return circumsphere3_standard(t); },
                    to_triangle, cfg.compute_radius));
                break;
            case Method::projective:
                report.rows.push_back(bench_method<Triangle3>(
                    m, inputs, [](const Triangle3& t) { return circumsphere3_projective(t); },
                    to_triangle, cfg.compute_radius));
                break;
            case Method::tetra_closed:
                report.rows.push_back(bench_method<Tetrahedron3>(
                    m, inputs,
                    [](const Tetrahedron3& t) { return circumsphere_tetrahedron_closed(t); },
                    to_tetrahedron, cfg.compute_radius));
                break;
            case Method::linear:
                report.rows.push_back(bench_method<SimplexN>(
                    m, inputs, [](const SimplexN& s) { return circumsphere_simplex_linear(s); },
                    [](const SimplexN& s) { return s; }, cfg.compute_radius));
                break;
            case Method::facet_projective:
                report.rows.push_back(bench_method<SimplexN>(
                    m, inputs, [](const SimplexN& s) { return circumsphere_facet_projective(s); },
                    [](const SimplexN& s) { return s; }, cfg.compute_radius));
                break;
        }
    }

    double standard_median = 0.0;
    for (const MethodStats& r : report.rows)
        if (r.method == Method::standard) standard_median = r.ns_op_median;
    if (standard_median > 0.0)
        for (MethodStats& r : report.rows)
            if (r.ns_op_median > 0.0) r.speedup_vs_standard = standard_median / r.ns_op_median;

    return report;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string emit_csv(const BenchReport& report) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const MethodStats& r : report.rows) {
        out << to_string(r.method) << ',' << to_string(report.family) << ',' << report.dim << ','
            << report.count << ',' << report.seed << ',' << format_double(r.ns_op_median) << ','
            << format_double(r.ns_op_p10) << ',' << format_double(r.ns_op_p90) << ','
            << format_double(r.max_resid) << ',' << format_double(r.mean_resid) << ','
            << r.failures << ',' << format_double(r.speedup_vs_standard) << '\n';
    }
    return out.str();
}

std::string emit_json(const BenchReport& report) {
    nlohmann::json j;
    j["family"] = to_string(report.family);
    j["dim"] = report.dim;
    j["count"] = report.count;
    j["seed"] = report.seed;
    j["compute_radius"] = report.compute_radius;
    j["rows"] = nlohmann::json::array();
    for (const MethodStats& r : report.rows) {
        j["rows"].push_back({{"method", to_string(r.method)},
                             {"ns_op_median", r.ns_op_median},
                             {"ns_op_p10", r.ns_op_p10},
                             {"ns_op_p90", r.ns_op_p90},
                             {"max_resid", r.max_resid},
                             {"mean_resid", r.mean_resid},
                             {"failures", r.failures},
                             {"speedup_vs_standard", r.speedup_vs_standard}});
    }
    return j.dump(2) + "\n";
}

BenchReport parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw Error("bad CSV header: " + line);

    BenchReport report;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) f.push_back(tok);
        if (f.size() != 12) throw Error("bad CSV row: " + line);

        MethodStats r;
        const auto m = parse_method(f[0]);
        const auto fam = parse_family(f[1]);
        if (!m || !fam) throw Error("bad CSV row: " + line);
        r.method = *m;
        if (first) {
            report.family = *fam;
            report.dim = std::stoul(f[2]);
            report.count = std::stoul(f[3]);
            report.seed = std::stoull(f[4]);
            first = false;
        }
        r.ns_op_median = std::stod(f[5]);
        r.ns_op_p10 = std::stod(f[6]);
        r.ns_op_p90 = std::stod(f[7]);
        r.max_resid = std::stod(f[8]);
        r.mean_resid = std::stod(f[9]);
        r.failures = std::stoul(f[10]);
        r.speedup_vs_standard = std::stod(f[11]);
        report.rows.push_back(r);
    }
    return report;
}

BenchReport parse_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    BenchReport report;
    report.family = parse_family(j.at("family").get<std::string>()).value();
    report.dim = j.at("dim").get<std::size_t>();
    report.count = j.at("count").get<std::size_t>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.compute_radius = j.at("compute_radius").get<bool>();
    for (const auto& row : j.at("rows")) {
        MethodStats r;
        r.method = parse_method(row.at("method").get<std::string>()).value();
        r.ns_op_median = row.at("ns_op_median").get<double>();
        r.ns_op_p10 = row.at("ns_op_p10").get<double>();
        r.ns_op_p90 = row.at("ns_op_p90").get<double>();
        r.max_resid = row.at("max_resid").get<double>();
        r.mean_resid = row.at("mean_resid").get<double>();
        r.failures = row.at("failures").get<std::size_t>();
        r.speedup_vs_standard = row.at("speedup_vs_standard").get<double>();
        report.rows.push_back(r);
    }
    return report;
}

}  // namespace circum
