#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bh::suites {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

using Results = std::vector<CheckResult>;

/// Shifted-dimension correctness: brute-force path oracle on random pairs,
/// Pascal binomials up to level 12, Young hook-length dimensions up to 8,
/// and the product factorization identity on full pair grids.
Results suite_dims(std::uint64_t seed, int horizon);

/// Harmonicity residual batteries: Thoma panel, product cases 1-3 with
/// finite and semifinite factors, flange shapes, and the four slow-graph
/// families. No 'violated' rows allowed.
Results suite_residuals(std::uint64_t seed, int horizon);

/// Level-sum normalization of the Thoma panel, with frozen worked values.
Results suite_normalization();

/// Weight and factor recovery: exact weight grids, the geometric partial
/// sums with certified tail bounds, and Pascal-harmonicity of projections.
Results suite_recovery(std::uint64_t seed, int horizon);

/// The equality instance of the dimension-comparison inequality, plus the
/// divergent extension that crosses the 10^3 bound inside the truncation.
Results suite_boyer(int horizon);

/// Extension partial sums are nondecreasing and become constant on ideals.
Results suite_extension(std::uint64_t seed, int horizon);

/// Classification round trip over the slow-graph family panel.
Results suite_slow(std::uint64_t seed, int horizon);

/// Kernel/support structure: closure, saturation, primitivity, and the
/// support product factorization.
Results suite_structure(int horizon);

Results suite_all(std::uint64_t seed, int horizon);

/// Runs the named suite: dims, residuals, normalization, recovery, boyer,
/// extension, slow, structure, or all. Throws on unknown names.
Results run_suite(const std::string& name, std::uint64_t seed, int horizon);

bool all_pass(const Results& results);
std::string to_tsv(const Results& results);
std::string to_json_text(const Results& results);

}  // namespace bh::suites
