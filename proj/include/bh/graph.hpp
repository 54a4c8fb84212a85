#pragma once

#include "bh/extnum.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace bh {

/// Address of a vertex: its level and its position within the level.
struct VertexId {
    int level = 0;
    int index = 0;
    auto operator<=>(const VertexId&) const = default;
};

struct Edge {
    int target_index;  // index within the adjacent level
    Rational kappa;    // strictly positive multiplicity
};

struct Violation {
    std::string what;
};

/// Validation outcome for the graded-graph axioms; empty means valid.
struct ValidationReport {
    std::vector<Violation> problems;
    bool ok() const { return problems.empty(); }
};

class GradedGraph;

/// Product decomposition metadata carried by graphs built as direct products.
struct ProductStructure {
    std::shared_ptr<const GradedGraph> g1;
    std::shared_ptr<const GradedGraph> g2;
    // coords[level][index] = (vertex of g1, vertex of g2)
    std::vector<std::vector<std::pair<VertexId, VertexId>>> coords;
};

/// dim(source, .) for every level of the truncation, computed by a
/// level-by-level forward sweep.
struct DimTable {
    VertexId source;
    // rows[k][idx] = dim(source, vertex(source.level + k, idx))
    std::vector<std::vector<Rational>> rows;
};

struct WeightedPath {
    std::vector<VertexId> vertices;
    Rational weight;
};

/// Finite truncation of a graded graph: leveled label lists plus a positive
/// rational multiplicity on each edge between adjacent levels. Immutable
/// after construction; all read paths are safe to share across threads.
class GradedGraph {
public:
    friend class GraphBuilder;

    const std::string& name() const { return name_; }
    bool is_branching() const { return branching_; }
    int max_level() const { return static_cast<int>(levels_.size()) - 1; }
    int level_size(int level) const { return static_cast<int>(levels_.at(level).size()); }
    int vertex_count() const;

    const std::string& label(VertexId v) const { return levels_.at(v.level).at(v.index); }
    bool has_label(const std::string& label) const { return by_label_.count(label) > 0; }
    VertexId vertex(const std::string& label) const;

    const std::vector<Edge>& out_edges(VertexId v) const { return out_.at(v.level).at(v.index); }
    const std::vector<Edge>& in_edges(VertexId v) const { return in_.at(v.level).at(v.index); }
    const Rational& kappa(VertexId from, VertexId to) const;
    bool has_edge(VertexId from, VertexId to) const;

    ValidationReport validate() const;

    /// Weighted path count dim(mu, nu); 1 when mu = nu, 0 when nu is not above mu.
    Rational shifted_dim(VertexId mu, VertexId nu) const;
    /// Shared table of dim(source, .) values; cached per source vertex.
    std::shared_ptr<const DimTable> dim_table(VertexId source) const;
    /// True iff mu = nu or some monotone path joins them.
    bool leq(VertexId mu, VertexId nu) const;

    /// Brute-force enumeration of all monotone paths mu -> nu with their
    /// kappa-products. Throws if more than `cap` paths exist.
    std::vector<WeightedPath> enumerate_paths(VertexId mu, VertexId nu, std::size_t cap) const;

    const std::optional<ProductStructure>& product() const { return product_; }

    /// Optional spill directory for dim tables (see BH_CACHE_DIR).
    void set_dim_cache_dir(std::filesystem::path dir) const;
    /// Stable content hash over levels, labels and weighted edges.
    std::uint64_t content_hash() const;

private:
    GradedGraph() = default;
    DimTable compute_dim_table(VertexId source) const;
    std::optional<DimTable> load_spilled(VertexId source) const;
    void spill(const DimTable& table) const;

    std::string name_;
    bool branching_ = false;
    std::vector<std::vector<std::string>> levels_;
    std::unordered_map<std::string, VertexId> by_label_;
    std::vector<std::vector<std::vector<Edge>>> out_;
    std::vector<std::vector<std::vector<Edge>>> in_;
    std::vector<Violation> construction_violations_;
    std::optional<ProductStructure> product_;

    mutable std::mutex dim_mutex_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const DimTable>> dim_cache_;
    mutable std::optional<std::filesystem::path> dim_spill_dir_;
    mutable std::optional<std::uint64_t> hash_;
};

using GraphPtr = std::shared_ptr<const GradedGraph>;

class GraphBuilder {
public:
    GraphBuilder(std::string name, bool branching);
    /// Levels must be appended in order; labels must be globally unique.
    void add_level(std::vector<std::string> labels);
    /// Both endpoints must already exist; kappa must be positive.
    void add_edge(const std::string& from, const std::string& to, Rational kappa);
    void set_product(ProductStructure product);
    /// Finalizes the graph without enforcing the graded-graph axioms;
    /// call validate() on the result to check them.
    GraphPtr build();

private:
    std::unique_ptr<GradedGraph> g_;
};

enum class BuiltinGraph { young, pascal, nat };

/// young: partitions with add-a-box edges; pascal: pairs (i, j) with unit
/// steps; nat: the half line. All edge multiplicities are 1.
GraphPtr builtin_graph(BuiltinGraph kind, int max_level);
std::optional<BuiltinGraph> parse_builtin_name(std::string_view s);

/// Percent-escaping of ',' '%' and the product separator, so composite
/// labels round-trip.
std::string escape_label_component(std::string_view s);
std::string unescape_label_component(std::string_view s);

inline constexpr std::string_view kProductSeparator = "⊗";  // circled times

}  // namespace bh
