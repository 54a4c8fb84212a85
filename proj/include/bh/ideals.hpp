#pragma once

#include "bh/graph.hpp"

#include <vector>

namespace bh {

enum class SetKind { ideal, coideal, plain };

std::string set_kind_name(SetKind k);

/// A set of vertices tagged as ideal (upward closed), coideal (downward
/// closed) or plain. Membership is classified on levels 0..horizon.
class VertexSet {
public:
    VertexSet(GraphPtr graph, SetKind kind, int horizon);

    static VertexSet principal_ideal(GraphPtr graph, VertexId v);
    static VertexSet principal_coideal(GraphPtr graph, VertexId v);
    /// Builds from explicit members; closure is checked up to the horizon.
    static VertexSet from_members(GraphPtr graph, SetKind kind,
                                  const std::vector<VertexId>& members, int horizon);

    const GraphPtr& graph() const { return graph_; }
    SetKind kind() const { return kind_; }
    int horizon() const { return horizon_; }
    bool contains(VertexId v) const;
    void insert(VertexId v);
    std::vector<VertexId> members() const;  // level order
    int size() const;
    int level_count(int level) const;

    /// The set-complement with the kind flipped; requires ideal or coideal.
    VertexSet complement() const;

    /// Coideal: every member strictly below `horizon` has a successor in the
    /// set. Ideal: every vertex below `horizon` whose successors all lie in
    /// the set is itself a member.
    bool is_saturated(int horizon) const;

    /// Pairwise common-upper-bound check inside the set. A pair refutes
    /// primitivity only when the graph contains an upper bound within the
    /// covered levels but the set does not; pairs whose joins lie beyond
    /// the horizon are not decidable from the truncation and are skipped.
    bool is_primitive_coideal() const;

    /// Subgraph induced on the members (edges with both endpoints inside).
    GraphPtr induced_subgraph(const std::string& name) const;

    /// Throws if closure is violated on levels 0..horizon.
    void check_closure() const;

private:
    GraphPtr graph_;
    SetKind kind_;
    int horizon_;
    std::vector<std::vector<bool>> member_;
};

struct ProductCoidealFactors {
    VertexSet j1;
    VertexSet j2;
    // Per factor: does it look saturated-and-primitive, or principal, within
    // the truncation? (Both can hold for a truncated coideal.)
    bool j1_saturated_primitive = false;
    bool j1_principal = false;
    bool j2_saturated_primitive = false;
    bool j2_principal = false;
};

/// Projects a coideal of a product graph onto its factors and verifies the
/// product decomposition J = J1 x J2. Throws if J is not of product form.
ProductCoidealFactors product_coideal_factor(const VertexSet& set);

}  // namespace bh
