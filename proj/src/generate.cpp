#include "circum/generate.hpp"

#include <cmath>
#include <random>

#include "circum/errors.hpp"
#include "circum/linalg.hpp"

namespace circum {

std::string to_string(Method m) {
    switch (m) {
        case Method::standard: return "standard";
        case Method::projective: return "projective";
        case Method::linear: return "linear";
        case Method::tetra_closed: return "tetra-closed";
        case Method::facet_projective: return "facet-projective";
    }
    return "?";
}

std::string to_string(Family f) {
    switch (f) {
        case Family::uniform: return "uniform";
        case Family::needle: return "needle";
        case Family::cap: return "cap";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string& s) {
    if (s == "standard") return Method::standard;
    if (s == "projective") return Method::projective;
    if (s == "linear") return Method::linear;
    if (s == "tetra-closed") return Method::tetra_closed;
    if (s == "facet-projective") return Method::facet_projective;
    return std::nullopt;
}

std::optional<Family> parse_family(const std::string& s) {
    if (s == "uniform") return Family::uniform;
    if (s == "needle") return Family::needle;
    if (s == "cap") return Family::cap;
    return std::nullopt;
}

std::size_t vertices_for(Method m, std::size_t dim) {
    switch (m) {
        case Method::standard:
        case Method::projective:
            return 3;
        case Method::tetra_closed:
            return 4;
        case Method::linear:
            return dim + 1;
        case Method::facet_projective:
            return dim;
    }
    return 0;
}

namespace {

double conditioning_from(const SimplexN& s, std::size_t v0) {
    const std::size_t m = s.count() - 1;
    std::vector<VecN> edges;
    edges.reserve(m);
    double denom = 1.0;
    for (std::size_t i = 0; i < s.count(); ++i) {
        if (i == v0) continue;
        edges.push_back(s.vertices[i] - s.vertices[v0]);
        denom *= norm_sq(edges.back());
    }
    SquareMatrix gram(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram(i, j) = dot(edges[i], edges[j]);
    if (!(denom > 0.0)) return 0.0;
    return det(gram) / denom;
}

}  // namespace

double conditioning_ratio(const SimplexN& s) {
    // Worst case over the privileged-vertex choice, so the measure does
    // not depend on vertex order.
    double worst = conditioning_from(s, 0);
    for (std::size_t v = 1; v < s.count(); ++v)
        worst = std::min(worst, conditioning_from(s, v));
    return worst;
}

namespace {

VecN random_point(std::mt19937_64& rng, std::size_t dim,
                  std::uniform_real_distribution<double>& box) {
    VecN v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = box(rng);
    return v;
}

VecN random_unit(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    VecN v(dim);
    double n = 0.0;
    while (n < 1e-8) {
        for (std::size_t i = 0; i < dim; ++i) v[i] = g(rng);
        n = norm(v);
    }
    return v / n;
}

// Unit vector orthogonal to `a`.
VecN random_unit_orthogonal(std::mt19937_64& rng, const VecN& a) {
    const VecN ah = a / norm(a);
    VecN d(a.dim());
    double n = 0.0;
    while (n < 1e-8) {
        d = random_unit(rng, a.dim());
        d = d - dot(d, ah) * ah;
        n = norm(d);
    }
    return d / n;
}

}  // namespace

std::vector<SimplexN> generate_inputs(const BenchConfig& cfg) {
    if (cfg.methods.empty()) throw DimensionMismatch("no methods configured");
    if (cfg.dim < 2) throw DimensionMismatch("dim must be >= 2");
    const std::size_t k = vertices_for(cfg.methods.front(), cfg.dim);
    for (Method m : cfg.methods) {
        if (vertices_for(m, cfg.dim) != k)
            throw DimensionMismatch("methods in one batch need the same input shape");
        const bool e3_only =
            m == Method::standard || m == Method::projective || m == Method::tetra_closed;
        if (e3_only && cfg.dim != 3)
            throw DimensionMismatch(to_string(m) + " requires dim 3");
    }
    if (cfg.family != Family::uniform && k != 3)
        throw DimensionMismatch("needle/cap families generate triangles only");

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    std::uniform_real_distribution<double> half(0.5, 2.0);

    std::vector<SimplexN> out;
    out.reserve(cfg.count);

    for (std::size_t idx = 0; idx < cfg.count; ++idx) {
        if (cfg.family == Family::uniform) {
            for (;;) {
                std::vector<VecN> vs;
                vs.reserve(k);
                for (std::size_t i = 0; i < k; ++i) vs.push_back(random_point(rng, cfg.dim, box));
                SimplexN s(std::move(vs));
                if (conditioning_ratio(s) >= 1e-6) {
                    out.push_back(std::move(s));
                    break;
                }
            }
            continue;
        }

        const int kexp = 1 + static_cast<int>(idx % 12);
        const double h = std::pow(10.0, -kexp);
        if (cfg.family == Family::needle) {
            // Two vertices at separation ~10^-k, third at distance O(1).
            const VecN c = random_point(rng, cfg.dim, box);
            const VecN a = half(rng) * random_unit(rng, cfg.dim);
            const VecN va = c + a;
            const VecN vb = va + h * random_unit_orthogonal(rng, a);
            out.push_back(SimplexN({va, vb, c}));
        } else {
            // Base of length O(1), apex lifted 10^-k of the base above
            // the midpoint.
            const VecN a = random_point(rng, cfg.dim, box);
            const VecN dir = random_unit(rng, cfg.dim);
            const double base = half(rng);
            const VecN b = a + base * dir;
            const VecN mid = a + (0.5 * base) * dir;
            const VecN apex = mid + (h * base) * random_unit_orthogonal(rng, dir);
            out.push_back(SimplexN({a, b, apex}));
        }
    }
    return out;
}

}  // namespace circum
