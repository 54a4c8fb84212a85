#include "bh/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace bh {

std::string set_kind_name(SetKind k) {
    switch (k) {
        case SetKind::ideal: return "ideal";
        case SetKind::coideal: return "coideal";
        case SetKind::plain: return "plain";
    }
    return "?";
}

VertexSet::VertexSet(GraphPtr graph, SetKind kind, int horizon)
    : graph_(std::move(graph)), kind_(kind), horizon_(horizon) {
    if (horizon_ < 0 || horizon_ > graph_->max_level())
        throw std::invalid_argument("VertexSet horizon outside the truncation");
    member_.resize(horizon_ + 1);
    for (int level = 0; level <= horizon_; ++level)
        member_[level].assign(graph_->level_size(level), false);
}

bool VertexSet::contains(VertexId v) const {
    if (v.level < 0 || v.level > horizon_) return false;
    return member_[v.level][v.index];
}

void VertexSet::insert(VertexId v) {
    member_.at(v.level).at(v.index) = true;
}

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    for (int level = 0; level <= horizon_; ++level)
        for (int i = 0; i < static_cast<int>(member_[level].size()); ++i)
            if (member_[level][i]) out.push_back({level, i});
    return out;
}

int VertexSet::size() const {
    int n = 0;
    for (const auto& row : member_) n += static_cast<int>(std::count(row.begin(), row.end(), true));
    return n;
}

int VertexSet::level_count(int level) const {
    if (level < 0 || level > horizon_) return 0;
    return static_cast<int>(std::count(member_[level].begin(), member_[level].end(), true));
}

VertexSet VertexSet::principal_ideal(GraphPtr graph, VertexId v) {
    graph->label(v);  // existence check
    VertexSet s(graph, SetKind::ideal, graph->max_level());
    s.insert(v);
    // upward sweep: successors of members are members
    for (int level = v.level; level < graph->max_level(); ++level)
        for (int i = 0; i < graph->level_size(level); ++i)
            if (s.member_[level][i])
                for (const Edge& e : graph->out_edges({level, i}))
                    s.member_[level + 1][e.target_index] = true;
    return s;
}

VertexSet VertexSet::principal_coideal(GraphPtr graph, VertexId v) {
    graph->label(v);
    VertexSet s(graph, SetKind::coideal, graph->max_level());
    s.insert(v);
    for (int level = v.level; level > 0; --level)
        for (int i = 0; i < graph->level_size(level); ++i)
            if (s.member_[level][i])
                for (const Edge& e : graph->in_edges({level, i}))
                    s.member_[level - 1][e.target_index] = true;
    return s;
}

VertexSet VertexSet::from_members(GraphPtr graph, SetKind kind,
                                  const std::vector<VertexId>& members, int horizon) {
    VertexSet s(std::move(graph), kind, horizon);
    for (VertexId v : members) {
        if (v.level > horizon)
            throw std::invalid_argument("member above the set horizon");
        s.insert(v);
    }
    s.check_closure();
    return s;
}

void VertexSet::check_closure() const {
    if (kind_ == SetKind::plain) return;
    for (int level = 0; level < horizon_; ++level)
        for (int i = 0; i < static_cast<int>(member_[level].size()); ++i) {
            if (kind_ == SetKind::ideal && member_[level][i]) {
                for (const Edge& e : graph_->out_edges({level, i}))
                    if (!member_[level + 1][e.target_index])
                        throw std::invalid_argument(
                            "ideal is not upward closed at '" + graph_->label({level, i}) + "'");
            }
            if (kind_ == SetKind::coideal && !member_[level][i]) {
                for (const Edge& e : graph_->out_edges({level, i}))
                    if (member_[level + 1][e.target_index])
                        throw std::invalid_argument(
                            "coideal is not downward closed at '" +
                            graph_->label({level + 1, e.target_index}) + "'");
            }
        }
}

VertexSet VertexSet::complement() const {
    if (kind_ == SetKind::plain)
        throw std::invalid_argument("complement requires an ideal or coideal");
    VertexSet s(graph_, kind_ == SetKind::ideal ? SetKind::coideal : SetKind::ideal, horizon_);
    for (int level = 0; level <= horizon_; ++level)
        for (int i = 0; i < static_cast<int>(member_[level].size()); ++i)
            s.member_[level][i] = !member_[level][i];
    return s;
}

bool VertexSet::is_saturated(int horizon) const {
    if (kind_ == SetKind::plain)
        throw std::invalid_argument("saturation requires an ideal or coideal");
    if (horizon > horizon_)
        throw std::invalid_argument("saturation horizon exceeds the set's covered levels");
    for (int level = 0; level < horizon; ++level) {
        for (int i = 0; i < static_cast<int>(member_[level].size()); ++i) {
            if (kind_ == SetKind::coideal) {
                if (!member_[level][i]) continue;
                bool ok = false;
                for (const Edge& e : graph_->out_edges({level, i}))
                    if (member_[level + 1][e.target_index]) {
                        ok = true;
                        break;
                    }
                if (!ok) return false;
            } else {
                if (member_[level][i]) continue;
                const auto& edges = graph_->out_edges({level, i});
                if (edges.empty()) continue;
                bool all_inside = true;
                for (const Edge& e : edges)
                    if (!member_[level + 1][e.target_index]) {
                        all_inside = false;
                        break;
                    }
                if (all_inside) return false;  // the dual condition forces membership
            }
        }
    }
    return true;
}

bool VertexSet::is_primitive_coideal() const {
    if (kind_ != SetKind::coideal)
        throw std::invalid_argument("primitivity is checked on coideals");
    auto members_list = members();
    int n = static_cast<int>(members_list.size());
    // Upward reachability sweep per member, restricted to covered levels.
    auto up_set = [&](VertexId v) {
        std::vector<std::vector<bool>> up(horizon_ + 1);
        for (int level = 0; level <= horizon_; ++level)
            up[level].assign(graph_->level_size(level), false);
        up[v.level][v.index] = true;
        for (int level = v.level; level < horizon_; ++level)
            for (int i = 0; i < graph_->level_size(level); ++i)
                if (up[level][i])
                    for (const Edge& e : graph_->out_edges({level, i}))
                        up[level + 1][e.target_index] = true;
        return up;
    };
    std::vector<std::vector<std::vector<bool>>> ups;
    ups.reserve(n);
    for (VertexId v : members_list) ups.push_back(up_set(v));
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            bool graph_ub = false, set_ub = false;
            int start = std::max(members_list[a].level, members_list[b].level);
            for (int level = start; level <= horizon_ && !set_ub; ++level)
                for (int i = 0; i < graph_->level_size(level); ++i)
                    if (ups[a][level][i] && ups[b][level][i]) {
                        graph_ub = true;
                        if (member_[level][i]) {
                            set_ub = true;
                            break;
                        }
                    }
            if (graph_ub && !set_ub) return false;
        }
    return true;
}

GraphPtr VertexSet::induced_subgraph(const std::string& name) const {
    GraphBuilder b(name, false);
    int top = horizon_;
    while (top >= 0 && level_count(top) == 0) --top;
    if (top < 0) throw std::invalid_argument("cannot induce a graph on an empty set");
    for (int level = 0; level <= top; ++level) {
        std::vector<std::string> labels;
        for (int i = 0; i < static_cast<int>(member_[level].size()); ++i)
            if (member_[level][i]) labels.push_back(graph_->label({level, i}));
        b.add_level(std::move(labels));
    }
    for (int level = 0; level < top; ++level)
        for (int i = 0; i < static_cast<int>(member_[level].size()); ++i)
            if (member_[level][i])
                for (const Edge& e : graph_->out_edges({level, i}))
                    if (member_[level + 1][e.target_index])
                        b.add_edge(graph_->label({level, i}),
                                   graph_->label({level + 1, e.target_index}), e.kappa);
    return b.build();
}

namespace {

// Classifies a factor coideal within its truncation: principal means it has
// a unique maximal member generating it.
void classify_factor(const VertexSet& j, bool& saturated_primitive, bool& principal) {
    saturated_primitive = j.is_saturated(j.horizon()) && j.is_primitive_coideal();
    principal = false;
    std::vector<VertexId> maximal;
    for (VertexId v : j.members()) {
        bool has_succ = false;
        if (v.level < j.horizon())
            for (const Edge& e : j.graph()->out_edges(v))
                if (j.contains({v.level + 1, e.target_index})) {
                    has_succ = true;
                    break;
                }
        if (!has_succ) maximal.push_back(v);
    }
    if (maximal.size() == 1) {
        VertexSet p = VertexSet::principal_coideal(j.graph(), maximal[0]);
        principal = true;
        for (VertexId v : p.members())
            if (v.level <= j.horizon() && !j.contains(v)) principal = false;
        for (VertexId v : j.members())
            if (!p.contains(v)) principal = false;
    }
}

}  // namespace

ProductCoidealFactors product_coideal_factor(const VertexSet& set) {
    if (set.kind() != SetKind::coideal)
        throw std::invalid_argument("product_coideal_factor requires a coideal");
    const auto& prod = set.graph()->product();
    if (!prod)
        throw std::invalid_argument("product_coideal_factor requires a product graph");
    ProductCoidealFactors out{
        VertexSet(prod->g1, SetKind::coideal, std::min(set.horizon(), prod->g1->max_level())),
        VertexSet(prod->g2, SetKind::coideal, std::min(set.horizon(), prod->g2->max_level()))};
    for (VertexId v : set.members()) {
        auto [a, b] = prod->coords[v.level][v.index];
        if (a.level <= out.j1.horizon()) out.j1.insert(a);
        if (b.level <= out.j2.horizon()) out.j2.insert(b);
    }
    // J must equal J1 x J2 within the covered levels.
    for (int level = 0; level <= set.horizon(); ++level)
        for (int i = 0; i < set.graph()->level_size(level); ++i) {
            auto [a, b] = prod->coords[level][i];
            bool in_product = out.j1.contains(a) && out.j2.contains(b);
            if (in_product != set.contains({level, i}))
                throw std::invalid_argument(
                    "coideal is not a product of its projections (at '" +
                    set.graph()->label({level, i}) + "'); input was not primitive");
        }
    out.j1.check_closure();
    out.j2.check_closure();
    classify_factor(out.j1, out.j1_saturated_primitive, out.j1_principal);
    classify_factor(out.j2, out.j2_saturated_primitive, out.j2_principal);
    return out;
}

}  // namespace bh
