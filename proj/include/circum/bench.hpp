#pragma once

#include <string>
#include <vector>

#include "circum/generate.hpp"

namespace circum {

// Per-method timing and residual summary. speedup_vs_standard is 0 when
// the standard method was not part of the run.
struct MethodStats {
    Method method = Method::standard;
    double ns_op_median = 0.0;
    double ns_op_p10 = 0.0;
    double ns_op_p90 = 0.0;
    double max_resid = 0.0;
    double mean_resid = 0.0;
    std::size_t failures = 0;
    double speedup_vs_standard = 0.0;
};

struct BenchReport {
    Family family = Family::uniform;
    std::size_t dim = 3;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    bool compute_radius = false;
    std::vector<MethodStats> rows;
};

// Time each configured method over the generated batch: 3 warm-up passes,
// then the median of 9 repetitions of the full batch, single-threaded.
// Instances that raise a typed degeneracy error are counted as failures
// and excluded from the timed loop.
BenchReport run_bench(const BenchConfig& cfg);

inline constexpr const char* kCsvHeader =
    "method,family,dim,count,seed,ns_op_median,ns_op_p10,ns_op_p90,"
    "max_resid,mean_resid,failures,speedup_vs_standard";

std::string emit_csv(const BenchReport& report);
std::string emit_json(const BenchReport& report);

BenchReport parse_csv(const std::string& text);
BenchReport parse_json(const std::string& text);

// 17-significant-digit decimal rendering, enough to round-trip a double.
std::string format_double(double v);

}  // namespace circum
