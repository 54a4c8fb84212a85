#pragma once

#include "bh/harmonic.hpp"

#include <optional>

namespace bh {

/// Direct product of two truncated graphs: vertices are pairs with level
/// |la| + |mu|, edges move exactly one coordinate, labels are
/// "<la>SEP<mu>" with escaped components. Requires
/// max_level <= g1.max_level + g2.max_level.
GraphPtr direct_product(GraphPtr g1, GraphPtr g2, int max_level, std::string name = "");

/// Looks up the product vertex with coordinates (a, b).
VertexId product_vertex(const GradedGraph& product, VertexId a, VertexId b);

/// Splits a product label into its two components.
std::pair<std::string, std::string> split_product_label(const std::string& label);

FnPtr make_product_fn(ProductSpec spec, GraphPtr product_graph);

/// w1^k1 w2^k2 recovery: sum over |la1| = k1, |la2| = k2 of
/// dim1(la1) dim2(la2) fn(la1, la2). Throws on infinite values.
Rational recover_weights(const HarmonicFn& fn, int k1, int k2);

struct FactorSeries {
    Rational partial;                     // sum of the first M + 1 terms
    Rational last_term_level_sum;         // t_M, the level sum at n = M
    std::optional<Rational> tail_bound;   // certified bound on the remainder
};

/// Partial sums of the factor-recovery series
///   sum_n C(n + |v| - 1, n) * sum_{|other| = n} dim(other) fn(...)
/// nondecreasing in M and converging to phi_which(v). The tail bound is a
/// geometric-domination bound, available when fn is a case1 product spec.
FactorSeries recover_factor(const HarmonicFn& fn, int which, VertexId vertex, int truncation);

/// Pi^{nu1,nu2}(k1,k2): shifted-dimension-weighted level sums, a harmonic
/// function on the Pascal graph for any finite harmonic fn.
Rational pascal_projection(const HarmonicFn& fn, VertexId nu1, VertexId nu2, int k1, int k2);

struct DimIdentityReport {
    int checked = 0;
    int failures = 0;
    bool ok() const { return failures == 0; }
};

/// Verifies dim((mu1,mu2),(la1,la2)) = C(d1+d2, d1) dim1 dim2 on sampled
/// vertex pairs of a product graph.
DimIdentityReport product_dim_identity_check(const GradedGraph& product, int samples,
                                             std::uint64_t seed);

}  // namespace bh
