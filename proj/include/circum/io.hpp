#pragma once

#include <istream>
#include <vector>

#include "circum/circumsphere_nd.hpp"

namespace circum {

// One simplex per line, whitespace-separated decimal coordinates in
// vertex-major order; '#' starts a comment line. The vertex count is
// inferred from the token count divided by `dim`.
std::vector<SimplexN> read_simplices(std::istream& in, std::size_t dim);

std::vector<SimplexN> read_simplices_file(const std::string& path, std::size_t dim);

}  // namespace circum
