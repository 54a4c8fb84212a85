#pragma once

#include "bh/harmonic.hpp"
#include "bh/products.hpp"

#include <optional>

namespace bh {

/// The slow graph N x Gamma. Requires gamma truncated to at least max_level
/// so that every level of the product is complete.
GraphPtr slow_graph(GraphPtr gamma, int max_level);

/// Interleaves a path of Gamma with stay-steps along the N axis: the t-th
/// edge of the path is taken at time insertion_times[t]. Times must be
/// strictly increasing and positive, one per edge.
std::vector<VertexId> lift_path(const GradedGraph& slow, const std::vector<VertexId>& gamma_path,
                                const std::vector<int>& insertion_times);

FnPtr make_slow_fn(SlowSpec spec, GraphPtr slow_graph);

struct SlowClassification {
    std::optional<SlowSpec> spec;  // empty = unclassified
    std::string family_name;       // "fin-case1", "fin-case2", "semifin2", "semifin3", "unclassified"
};

/// Pattern-matcher inverse to make_slow_fn: detects which classified family
/// matches the tabulated values exactly on levels 0..horizon and extracts
/// its parameters. Inner factor functions come back as tables on Gamma.
SlowClassification classify_slow_spec(const HarmonicFn& fn, int horizon);

}  // namespace bh
