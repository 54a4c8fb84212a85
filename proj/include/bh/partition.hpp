#pragma once

#include "bh/extnum.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bh {

/// Integer partition: weakly decreasing positive parts. Empty = the diagram of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }  // number of cells |lambda|
    int rows() const { return static_cast<int>(parts_.size()); }
    /// Row length with parts_[i] = 0 beyond the last row; 1-based index.
    int row(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& other) const;
    Partition conjugate() const;

    /// All partitions obtained by adding one box.
    std::vector<Partition> grow() const;
    /// All partitions obtained by removing one box.
    std::vector<Partition> shrink() const;

    /// Hook lengths of all cells, row by row.
    std::vector<int> hook_lengths() const;

    /// Comma list "3,2,1"; the empty partition is "".
    std::string to_string() const;
    static std::optional<Partition> parse(std::string_view s);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Partitions of n in reverse-lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

/// z_mu = prod_k k^{m_k} m_k!, the centralizer size of the class mu.
BigInt cycle_type_order(const Partition& mu);

/// Number of standard Young tableaux, via the hook length formula.
BigInt hook_length_dimension(const Partition& lambda);

}  // namespace bh
