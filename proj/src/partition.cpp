#include "bh/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const {
    if (other.rows() > rows()) return false;
    for (int i = 0; i < other.rows(); ++i)
        if (parts_[i] < other.parts_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0]);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

std::vector<Partition> Partition::grow() const {
    std::vector<Partition> out;
    for (int i = 0; i <= rows(); ++i) {
        // extend row i+1 if it stays weakly decreasing
        if (i == 0 || row(i + 1) < row(i)) {
            std::vector<int> p = parts_;
            if (i == rows())
                p.push_back(1);
            else
                ++p[i];
            out.emplace_back(std::move(p));
        }
    }
    return out;
}

std::vector<Partition> Partition::shrink() const {
    std::vector<Partition> out;
    for (int i = 0; i < rows(); ++i) {
        if (i + 1 == rows() || parts_[i] > parts_[i + 1]) {
            std::vector<int> p = parts_;
            if (--p[i] == 0) p.pop_back();
            out.emplace_back(std::move(p));
        }
    }
    return out;
}

std::vector<int> Partition::hook_lengths() const {
    std::vector<int> out;
    Partition conj = conjugate();
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= row(i); ++j)
            out.push_back(row(i) - j + conj.row(j) - i + 1);
    return out;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::optional<Partition> Partition::parse(std::string_view s) {
    if (s.empty()) return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.empty()) return std::nullopt;
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + (c - '0');
            if (v > 1'000'000) return std::nullopt;
        }
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return std::nullopt;
        if (i && parts[i] > parts[i - 1]) return std::nullopt;
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    // reverse-lexicographic enumeration with bounded first part
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

BigInt cycle_type_order(const Partition& mu) {
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    BigInt z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

BigInt hook_length_dimension(const Partition& lambda) {
    BigInt num = 1;
    for (int i = 2; i <= lambda.size(); ++i) num *= i;
    BigInt den = 1;
    for (int h : lambda.hook_lengths()) den *= h;
    return num / den;
}

}  // namespace bh
