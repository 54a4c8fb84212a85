#include "bh/graph.hpp"
#include "bh/partition.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bh {

int GradedGraph::vertex_count() const {
    int n = 0;
    for (const auto& lv : levels_) n += static_cast<int>(lv.size());
    return n;
}

VertexId GradedGraph::vertex(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end())
        throw std::out_of_range("unknown vertex label '" + label + "' in graph '" + name_ + "'");
    return it->second;
}

const Rational& GradedGraph::kappa(VertexId from, VertexId to) const {
    for (const Edge& e : out_edges(from))
        if (e.target_index == to.index && to.level == from.level + 1) return e.kappa;
    throw std::out_of_range("no edge " + label(from) + " -> " + label(to));
}

bool GradedGraph::has_edge(VertexId from, VertexId to) const {
    if (to.level != from.level + 1) return false;
    for (const Edge& e : out_edges(from))
        if (e.target_index == to.index) return true;
    return false;
}

ValidationReport GradedGraph::validate() const {
    ValidationReport report;
    report.problems = construction_violations_;
    for (int level = 0; level < max_level(); ++level) {
        for (int i = 0; i < level_size(level); ++i) {
            if (out_[level][i].empty())
                report.problems.push_back({"vertex '" + levels_[level][i] +
                                           "' at level " + std::to_string(level) +
                                           " has no outgoing edge below the truncation"});
        }
    }
    if (branching_) {
        if (level_size(0) != 1)
            report.problems.push_back({"branching graph must have a single root, level 0 has " +
                                       std::to_string(level_size(0)) + " vertices"});
        for (int level = 1; level <= max_level(); ++level)
            for (int i = 0; i < level_size(level); ++i)
                if (in_[level][i].empty())
                    report.problems.push_back({"vertex '" + levels_[level][i] + "' at level " +
                                               std::to_string(level) + " has no incoming edge"});
    }
    return report;
}

DimTable GradedGraph::compute_dim_table(VertexId source) const {
    DimTable t;
    t.source = source;
    int span = max_level() - source.level;
    t.rows.resize(span + 1);
    t.rows[0].assign(level_size(source.level), Rational(0));
    t.rows[0][source.index] = Rational(1);
    for (int k = 0; k < span; ++k) {
        int level = source.level + k;
        t.rows[k + 1].assign(level_size(level + 1), Rational(0));
        for (int i = 0; i < level_size(level); ++i) {
            const Rational& d = t.rows[k][i];
            if (d.is_zero()) continue;
            for (const Edge& e : out_[level][i])
                t.rows[k + 1][e.target_index] += d * e.kappa;
        }
    }
    return t;
}

std::shared_ptr<const DimTable> GradedGraph::dim_table(VertexId source) const {
    label(source);  // bounds check
    std::pair<int, int> key{source.level, source.index};
    {
        std::lock_guard<std::mutex> lk(dim_mutex_);
        auto it = dim_cache_.find(key);
        if (it != dim_cache_.end()) return it->second;
    }
    std::shared_ptr<const DimTable> table;
    if (auto spilled = load_spilled(source))
        table = std::make_shared<const DimTable>(std::move(*spilled));
    else {
        table = std::make_shared<const DimTable>(compute_dim_table(source));
        spill(*table);
    }
    std::lock_guard<std::mutex> lk(dim_mutex_);
    auto [it, inserted] = dim_cache_.emplace(key, table);
    return it->second;  // keep the first full table if another thread raced us
}

Rational GradedGraph::shifted_dim(VertexId mu, VertexId nu) const {
    label(mu);
    label(nu);
    if (nu.level < mu.level) return Rational(0);
    if (nu.level == mu.level) return mu == nu ? Rational(1) : Rational(0);
    return dim_table(mu)->rows[nu.level - mu.level][nu.index];
}

bool GradedGraph::leq(VertexId mu, VertexId nu) const {
    return !shifted_dim(mu, nu).is_zero();
}

std::vector<WeightedPath> GradedGraph::enumerate_paths(VertexId mu, VertexId nu, std::size_t cap) const {
    label(mu);
    label(nu);
    std::vector<WeightedPath> out;
    if (nu.level < mu.level) return out;
    std::vector<VertexId> stack{mu};
    auto rec = [&](auto&& self, VertexId v, Rational w) -> void {
        if (v.level == nu.level) {
            if (v == nu) {
                if (out.size() >= cap)
                    throw std::runtime_error("more than " + std::to_string(cap) +
                                             " paths from " + label(mu) + " to " + label(nu));
                out.push_back({stack, w});
            }
            return;
        }
        for (const Edge& e : out_[v.level][v.index]) {
            VertexId next{v.level + 1, e.target_index};
            stack.push_back(next);
            self(self, next, w * e.kappa);
            stack.pop_back();
        }
    };
    rec(rec, mu, Rational(1));
    return out;
}

void GradedGraph::set_dim_cache_dir(std::filesystem::path dir) const {
    std::lock_guard<std::mutex> lk(dim_mutex_);
    dim_spill_dir_ = std::move(dir);
}

std::uint64_t GradedGraph::content_hash() const {
    {
        std::lock_guard<std::mutex> lk(dim_mutex_);
        if (hash_) return *hash_;
    }
    // FNV-1a over a canonical rendering, stable across platforms and runs.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    mix(name_);
    mix(branching_ ? "b1" : "b0");
    for (const auto& lv : levels_) {
        mix("L");
        for (const auto& lab : lv) mix(lab);
    }
    for (int level = 0; level < max_level(); ++level)
        for (int i = 0; i < level_size(level); ++i)
            for (const Edge& e : out_[level][i]) {
                mix(std::to_string(level) + ":" + std::to_string(i) + ">" +
                    std::to_string(e.target_index));
                mix(e.kappa.to_string());
            }
    std::lock_guard<std::mutex> lk(dim_mutex_);
    hash_ = h;
    return h;
}

namespace {

std::filesystem::path spill_path(const std::filesystem::path& dir, std::uint64_t hash, VertexId v) {
    std::ostringstream name;
    name << "dim-" << std::hex << hash << std::dec << "-" << v.level << "-" << v.index << ".tsv";
    return dir / name.str();
}

}  // namespace

std::optional<DimTable> GradedGraph::load_spilled(VertexId source) const {
    std::optional<std::filesystem::path> dir;
    {
        std::lock_guard<std::mutex> lk(dim_mutex_);
        dir = dim_spill_dir_;
    }
    if (!dir) return std::nullopt;
    std::ifstream in(spill_path(*dir, content_hash(), source));
    if (!in) return std::nullopt;
    DimTable t;
    t.source = source;
    int span = max_level() - source.level;
    t.rows.resize(span + 1);
    for (int k = 0; k <= span; ++k) {
        int level = source.level + k;
        t.rows[k].resize(level_size(level));
        for (int i = 0; i < level_size(level); ++i) {
            std::string tok;
            if (!(in >> tok)) return std::nullopt;
            auto r = Rational::parse(tok);
            if (!r) return std::nullopt;
            t.rows[k][i] = *r;
        }
    }
    return t;
}

void GradedGraph::spill(const DimTable& table) const {
    std::optional<std::filesystem::path> dir;
    {
        std::lock_guard<std::mutex> lk(dim_mutex_);
        dir = dim_spill_dir_;
    }
    if (!dir) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (ec) return;
    auto final_path = spill_path(*dir, content_hash(), table.source);
    auto tmp_path = final_path;
    tmp_path += ".tmp";
    {
        std::ofstream out(tmp_path);
        if (!out) return;
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "\t" : "") << row[i].to_string();
            out << "\n";
        }
    }
    std::filesystem::rename(tmp_path, final_path, ec);
}

GraphBuilder::GraphBuilder(std::string name, bool branching)
    : g_(new GradedGraph()) {
    g_->name_ = std::move(name);
    g_->branching_ = branching;
}

void GraphBuilder::add_level(std::vector<std::string> labels) {
    int level = static_cast<int>(g_->levels_.size());
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        auto [it, inserted] = g_->by_label_.emplace(labels[i], VertexId{level, i});
        if (!inserted)
            throw std::invalid_argument("duplicate vertex label '" + labels[i] + "'");
    }
    g_->out_.emplace_back(labels.size());
    g_->in_.emplace_back(labels.size());
    g_->levels_.push_back(std::move(labels));
}

void GraphBuilder::add_edge(const std::string& from, const std::string& to, Rational kappa) {
    VertexId a = g_->vertex(from);
    VertexId b = g_->vertex(to);
    // Misplaced or degenerate edges are recorded for validate() instead of
    // thrown, so loaders can report every problem in a file at once.
    if (b.level != a.level + 1) {
        g_->construction_violations_.push_back(
            {"edge '" + from + "' -> '" + to + "' does not connect adjacent levels (" +
             std::to_string(a.level) + " -> " + std::to_string(b.level) + ")"});
        return;
    }
    if (kappa.is_zero()) {
        g_->construction_violations_.push_back(
            {"edge '" + from + "' -> '" + to + "' has zero multiplicity"});
        return;
    }
    for (const Edge& e : g_->out_[a.level][a.index])
        if (e.target_index == b.index)
            throw std::invalid_argument("duplicate edge '" + from + "' -> '" + to + "'");
    g_->out_[a.level][a.index].push_back({b.index, kappa});
    g_->in_[b.level][b.index].push_back({a.index, kappa});
}

void GraphBuilder::set_product(ProductStructure product) {
    g_->product_ = std::move(product);
}

GraphPtr GraphBuilder::build() {
    for (auto& level : g_->out_)
        for (auto& edges : level)
            std::sort(edges.begin(), edges.end(),
                      [](const Edge& a, const Edge& b) { return a.target_index < b.target_index; });
    for (auto& level : g_->in_)
        for (auto& edges : level)
            std::sort(edges.begin(), edges.end(),
                      [](const Edge& a, const Edge& b) { return a.target_index < b.target_index; });
    return GraphPtr(g_.release());
}

GraphPtr builtin_graph(BuiltinGraph kind, int max_level) {
    if (max_level < 0) throw std::invalid_argument("max_level must be >= 0");
    switch (kind) {
        case BuiltinGraph::young: {
            GraphBuilder b("young", true);
            std::vector<std::vector<Partition>> levels;
            for (int n = 0; n <= max_level; ++n) {
                levels.push_back(partitions_of(n));
                std::vector<std::string> labels;
                for (const auto& p : levels.back()) labels.push_back(p.to_string());
                b.add_level(std::move(labels));
            }
            for (int n = 0; n < max_level; ++n)
                for (const auto& p : levels[n])
                    for (const auto& q : p.grow())
                        b.add_edge(p.to_string(), q.to_string(), Rational(1));
            return b.build();
        }
        case BuiltinGraph::pascal: {
            GraphBuilder b("pascal", true);
            auto lab = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
            for (int n = 0; n <= max_level; ++n) {
                std::vector<std::string> labels;
                for (int j = 0; j <= n; ++j) labels.push_back(lab(n - j, j));
                b.add_level(std::move(labels));
            }
            for (int n = 0; n < max_level; ++n)
                for (int j = 0; j <= n; ++j) {
                    b.add_edge(lab(n - j, j), lab(n - j + 1, j), Rational(1));
                    b.add_edge(lab(n - j, j), lab(n - j, j + 1), Rational(1));
                }
            return b.build();
        }
        case BuiltinGraph::nat: {
            GraphBuilder b("nat", true);
            for (int n = 0; n <= max_level; ++n) b.add_level({std::to_string(n)});
            for (int n = 0; n < max_level; ++n)
                b.add_edge(std::to_string(n), std::to_string(n + 1), Rational(1));
            return b.build();
        }
    }
    throw std::invalid_argument("unknown builtin graph");
}

std::optional<BuiltinGraph> parse_builtin_name(std::string_view s) {
    if (s == "young") return BuiltinGraph::young;
    if (s == "pascal") return BuiltinGraph::pascal;
    if (s == "nat") return BuiltinGraph::nat;
    return std::nullopt;
}

std::string escape_label_component(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s.compare(i, kProductSeparator.size(), kProductSeparator) == 0) {
            for (unsigned char c : kProductSeparator) {
                out += '%';
                out += hex[c >> 4];
                out += hex[c & 0xf];
            }
            i += kProductSeparator.size();
            continue;
        }
        unsigned char c = s[i];
        if (c == ',' || c == '%') {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 0xf];
        } else {
            out += static_cast<char>(c);
        }
        ++i;
    }
    return out;
}

std::string unescape_label_component(std::string_view s) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        return -1;
    };
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%' && i + 2 < s.size()) {
            int hi = nibble(s[i + 1]), lo = nibble(s[i + 2]);
            if (hi >= 0 && lo >= 0) {
                out += static_cast<char>(hi * 16 + lo);
                i += 2;
                continue;
            }
        }
        out += s[i];
    }
    return out;
}

}  // namespace bh
