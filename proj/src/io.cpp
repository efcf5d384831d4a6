#include "circum/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "circum/errors.hpp"

namespace circum {

std::vector<SimplexN> read_simplices(std::istream& in, std::size_t dim) {
    if (dim < 2) throw DimensionMismatch("dim must be >= 2");
    std::vector<SimplexN> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);

        std::istringstream ls(line);
        std::vector<double> vals;
        double v;
        while (ls >> v) vals.push_back(v);
        if (!ls.eof())
            throw DimensionMismatch("line " + std::to_string(lineno) + ": bad number");
        if (vals.empty()) continue;
        if (vals.size() % dim != 0)
            throw DimensionMismatch("line " + std::to_string(lineno) +
                                    ": coordinate count not a multiple of dim");
        for (double x : vals)
            if (!std::isfinite(x))
                throw DimensionMismatch("line " + std::to_string(lineno) +
                                        ": non-finite coordinate");

        std::vector<VecN> vertices;
        vertices.reserve(vals.size() / dim);
        for (std::size_t i = 0; i < vals.size(); i += dim) {
            VecN p(dim);
            for (std::size_t j = 0; j < dim; ++j) p[j] = vals[i + j];
            vertices.push_back(std::move(p));
        }
        out.push_back(SimplexN(std::move(vertices)));
    }
    return out;
}

std::vector<SimplexN> read_simplices_file(const std::string& path, std::size_t dim) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    return read_simplices(in, dim);
}

}  // namespace circum
