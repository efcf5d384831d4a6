#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circum/circumsphere_nd.hpp"

namespace circum {

enum class Method { standard, projective, linear, tetra_closed, facet_projective };
enum class Family { uniform, needle, cap };

std::string to_string(Method m);
std::string to_string(Family f);
std::optional<Method> parse_method(const std::string& s);
std::optional<Family> parse_family(const std::string& s);

// Vertices per simplex that a method consumes in dimension `dim`.
std::size_t vertices_for(Method m, std::size_t dim);

struct BenchConfig {
    std::vector<Method> methods;
    Family family = Family::uniform;
    std::size_t count = 1;
    std::size_t dim = 3;
    std::uint64_t seed = 0;
    bool compute_radius = false;
};

// Deterministic input generation. `uniform` draws vertices i.i.d. in
// [-1,1]^dim, rejecting simplices whose scale-free edge Gram-determinant
// ratio falls below 1e-6. `needle` clusters two vertices at separation
// 10^-k and `cap` lifts the apex 10^-k above the base midpoint, with k
// cycling 1..12 over the batch; both families are triangle-only and skip
// the conditioning rejection.
std::vector<SimplexN> generate_inputs(const BenchConfig& cfg);

// Scale-free conditioning of a simplex: det(G) / prod(|e_i|^2) for the
// Gram matrix G of the edge vectors from V_0 (equals |a x b|^2 /
// (|a|^2 |b|^2) for a triangle).
double conditioning_ratio(const SimplexN& s);

}  // namespace circum
