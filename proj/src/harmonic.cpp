#include "bh/harmonic.hpp"

#include <sstream>
#include <stdexcept>

namespace bh {

namespace {

Rational rat_pow(const Rational& base, int exp) {
    // 0^0 = 1, as required by the w = 1 slow family at n = 0.
    Rational acc(1);
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

Partition label_partition(const GradedGraph& g, VertexId v) {
    auto p = Partition::parse(g.label(v));
    if (!p)
        throw std::invalid_argument("vertex '" + g.label(v) + "' of graph '" + g.name() +
                                    "' is not a partition label");
    return *p;
}

const ProductStructure& require_product(const GradedGraph& g) {
    if (!g.product())
        throw std::invalid_argument("graph '" + g.name() + "' carries no product structure");
    return *g.product();
}

}  // namespace

HarmonicFn::HarmonicFn(GraphPtr graph, FnVariant spec, std::string description)
    : graph_(std::move(graph)), spec_(std::move(spec)), description_(std::move(description)) {}

ExtValue HarmonicFn::eval(VertexId v) const {
    graph_->label(v);  // bounds check
    std::pair<int, int> key{v.level, v.index};
    {
        std::lock_guard<std::mutex> lk(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    ExtValue value = compute(v);
    std::lock_guard<std::mutex> lk(memo_mutex_);
    auto [it, inserted] = memo_.emplace(key, std::move(value));
    return it->second;
}

ExtValue HarmonicFn::compute(VertexId v) const {
    return std::visit(
        [&](const auto& spec) -> ExtValue {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, TableSpec>) {
                auto it = spec.values.find({v.level, v.index});
                if (it == spec.values.end())
                    throw std::out_of_range("table function has no value at '" +
                                            graph_->label(v) + "'");
                return it->second;
            } else if constexpr (std::is_same_v<T, ThomaSpecFn>) {
                return ExtValue(thoma_eval(spec.params, label_partition(*graph_, v)));
            } else if constexpr (std::is_same_v<T, FlangeSpecFn>) {
                return flange_eval(spec.spec, label_partition(*graph_, v));
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                const auto& prod = require_product(*graph_);
                auto [a, b] = prod.coords[v.level][v.index];
                switch (spec.kase) {
                    case ProductCase::case1: {
                        ExtValue w = ExtValue(rat_pow(spec.w1, a.level) *
                                              rat_pow(Rational(1) - spec.w1, b.level));
                        return w * spec.f1->eval(a) * spec.f2->eval(b);
                    }
                    case ProductCase::case2: {
                        if (!prod.g2->leq(b, spec.nu2)) return ExtValue(Rational(0));
                        if (b == spec.nu2) return spec.f1->eval(a);
                        return ExtValue::infinity();
                    }
                    case ProductCase::case3: {
                        if (!prod.g1->leq(a, spec.nu1)) return ExtValue(Rational(0));
                        if (a == spec.nu1) return spec.f2->eval(b);
                        return ExtValue::infinity();
                    }
                }
                throw std::logic_error("unreachable");
            } else if constexpr (std::is_same_v<T, SlowSpec>) {
                const auto& prod = require_product(*graph_);
                auto [a, b] = prod.coords[v.level][v.index];
                int n = a.level;  // N-coordinate
                switch (spec.family) {
                    case SlowFamily::fin_case1: {
                        ExtValue w = ExtValue(rat_pow(Rational(1) - spec.w, n) *
                                              rat_pow(spec.w, b.level));
                        return w * spec.inner->eval(b);
                    }
                    case SlowFamily::fin_case2:
                        return ExtValue(Rational(b.level == 0 ? 1 : 0));
                    case SlowFamily::semifin2: {
                        if (!prod.g2->leq(b, spec.nu)) return ExtValue(Rational(0));
                        if (b == spec.nu) return ExtValue(spec.c);
                        return ExtValue::infinity();
                    }
                    case SlowFamily::semifin3: {
                        if (n > spec.m) return ExtValue(Rational(0));
                        if (n < spec.m) return ExtValue::infinity();
                        return spec.inner->eval(b);
                    }
                }
                throw std::logic_error("unreachable");
            } else {
                static_assert(std::is_same_v<T, ExtensionSpec>);
                if (spec.ideal->contains(v)) return spec.inner->eval(v);
                return extend_from_ideal(*spec.ideal, *spec.inner, v, spec.level);
            }
        },
        spec_);
}

FnPtr make_table_fn(GraphPtr graph, TableSpec table, std::string description) {
    return std::make_shared<HarmonicFn>(std::move(graph), std::move(table), std::move(description));
}

FnPtr make_thoma_fn(GraphPtr young_graph, ThomaParams params) {
    params.validate();
    std::string desc = "thoma:a=";
    for (std::size_t i = 0; i < params.alpha.size(); ++i)
        desc += (i ? "," : "") + params.alpha[i].to_string();
    desc += ";b=";
    for (std::size_t i = 0; i < params.beta.size(); ++i)
        desc += (i ? "," : "") + params.beta[i].to_string();
    return std::make_shared<HarmonicFn>(std::move(young_graph), ThomaSpecFn{std::move(params)},
                                        std::move(desc));
}

FnPtr make_flange_fn(GraphPtr young_graph, FlangeSpec spec) {
    spec.validate();
    std::string desc = "flange:k=" + std::to_string(spec.k) + ",l=" + std::to_string(spec.l) +
                       ",nu=" + spec.nu.to_string();
    return std::make_shared<HarmonicFn>(std::move(young_graph), FlangeSpecFn{std::move(spec)},
                                        std::move(desc));
}

FnPtr make_extension_fn(GraphPtr graph, std::shared_ptr<const VertexSet> ideal, FnPtr inner,
                        int level) {
    if (ideal->kind() != SetKind::ideal)
        throw std::invalid_argument("extension requires an ideal");
    if (level < 0 || level > graph->max_level())
        throw std::out_of_range("extension level exceeds the truncation");
    return std::make_shared<HarmonicFn>(
        std::move(graph), ExtensionSpec{std::move(ideal), std::move(inner), level},
        "extension@" + std::to_string(level));
}

FnPtr tabulate(const HarmonicFn& fn, int horizon) {
    TableSpec table;
    const GradedGraph& g = *fn.graph();
    if (horizon > g.max_level())
        throw std::out_of_range("tabulation horizon exceeds the truncation");
    for (int level = 0; level <= horizon; ++level)
        for (int i = 0; i < g.level_size(level); ++i)
            table.values[{level, i}] = fn.eval({level, i});
    return make_table_fn(fn.graph(), std::move(table), "table(" + fn.description() + ")");
}

std::string residual_status_name(ResidualStatus s) {
    switch (s) {
        case ResidualStatus::exact: return "exact";
        case ResidualStatus::infinite_consistent: return "infinite-consistent";
        case ResidualStatus::violated: return "violated";
    }
    return "?";
}

ResidualReport harmonicity_residuals(const HarmonicFn& fn, int up_to_level) {
    const GradedGraph& g = *fn.graph();
    if (up_to_level >= g.max_level())
        throw std::invalid_argument(
            "residual horizon must stay below the truncation level (top-level vertices have no "
            "successors)");
    ResidualReport report;
    report.horizon = up_to_level;
    for (int level = 0; level <= up_to_level; ++level) {
        for (int i = 0; i < g.level_size(level); ++i) {
            VertexId v{level, i};
            ExtValue lhs = fn.eval(v);
            ExtValue rhs(Rational(0));
            for (const Edge& e : g.out_edges(v))
                rhs += ExtValue(e.kappa) * fn.eval({level + 1, e.target_index});
            ResidualStatus status;
            if (lhs.is_finite() && rhs.is_finite() && lhs == rhs)
                status = ResidualStatus::exact;
            else if (lhs.is_infinite() && rhs.is_infinite())
                status = ResidualStatus::infinite_consistent;
            else
                status = ResidualStatus::violated;
            switch (status) {
                case ResidualStatus::exact: ++report.exact; break;
                case ResidualStatus::infinite_consistent: ++report.infinite_consistent; break;
                case ResidualStatus::violated: ++report.violated; break;
            }
            report.rows.push_back({v, std::move(lhs), std::move(rhs), status});
        }
    }
    return report;
}

namespace {

VertexSet classify_vertices(const HarmonicFn& fn, int up_to_level, SetKind kind,
                            bool (*pred)(const ExtValue&)) {
    VertexSet s(fn.graph(), kind, up_to_level);
    const GradedGraph& g = *fn.graph();
    for (int level = 0; level <= up_to_level; ++level)
        for (int i = 0; i < g.level_size(level); ++i)
            if (pred(fn.eval({level, i}))) s.insert({level, i});
    return s;
}

}  // namespace

VertexSet finiteness_ideal(const HarmonicFn& fn, int up_to_level) {
    return classify_vertices(fn, up_to_level, SetKind::ideal,
                             [](const ExtValue& v) { return v.is_finite(); });
}

VertexSet kernel(const HarmonicFn& fn, int up_to_level) {
    return classify_vertices(fn, up_to_level, SetKind::ideal,
                             [](const ExtValue& v) { return v.is_zero(); });
}

VertexSet support(const HarmonicFn& fn, int up_to_level) {
    return classify_vertices(fn, up_to_level, SetKind::coideal,
                             [](const ExtValue& v) { return !v.is_zero(); });
}

ExtValue extend_from_ideal(const VertexSet& ideal, const HarmonicFn& inner, VertexId target,
                           int level) {
    if (ideal.kind() != SetKind::ideal)
        throw std::invalid_argument("extend_from_ideal requires an ideal");
    const GradedGraph& g = *ideal.graph();
    if (level > g.max_level() || level > ideal.horizon())
        throw std::out_of_range("extension level exceeds the truncation");
    g.label(target);
    ExtValue total(Rational(0));
    for (int i = 0; i < g.level_size(level); ++i) {
        VertexId mu{level, i};
        if (!ideal.contains(mu)) continue;
        Rational d = g.shifted_dim(target, mu);
        if (d.is_zero()) continue;
        total += ExtValue(d) * inner.eval(mu);
    }
    return total;
}

bool BoyerReport::all_equality() const {
    for (const auto& row : rows)
        if (row.lhs != row.rhs) return false;
    return true;
}

BoyerReport boyer_check(const VertexSet& ideal, VertexId lambda, VertexId lambda_prime,
                        const Rational& beta, int level_lo, int level_hi) {
    if (ideal.kind() != SetKind::ideal)
        throw std::invalid_argument("boyer_check requires an ideal");
    if (beta.is_zero()) throw std::invalid_argument("boyer_check requires beta > 0");
    if (ideal.contains(lambda))
        throw std::invalid_argument("lambda must lie in the complement of the ideal");
    if (!ideal.contains(lambda_prime))
        throw std::invalid_argument("lambda' must lie in the ideal");
    const GradedGraph& g = *ideal.graph();
    if (level_hi > ideal.horizon())
        throw std::out_of_range("boyer_check level range exceeds the set horizon");
    BoyerReport report;
    bool first = true;
    for (int level = std::max(level_lo, 1); level <= level_hi; ++level) {
        for (int i = 0; i < g.level_size(level); ++i) {
            VertexId eta{level, i};
            if (!ideal.contains(eta)) continue;
            Rational lhs(0);
            for (const Edge& e : g.in_edges(eta)) {
                VertexId mu{level - 1, e.target_index};
                if (ideal.contains(mu)) continue;  // only mu in the coideal J
                lhs += g.shifted_dim(lambda, mu) * e.kappa;
            }
            Rational rhs = beta * g.shifted_dim(lambda_prime, eta);
            SignedRat slack = lhs.raw() - rhs.raw();
            if (first || slack < report.min_slack) report.min_slack = slack;
            first = false;
            bool violated = slack < 0;
            if (violated) ++report.violations;
            report.rows.push_back({eta, std::move(lhs), std::move(rhs), violated});
        }
    }
    return report;
}

std::vector<ExtValue> semifinite_proxy_sequence(const HarmonicFn& fn, VertexId lambda, int n_lo,
                                                int n_hi) {
    const GradedGraph& g = *fn.graph();
    g.label(lambda);
    if (n_hi > g.max_level()) throw std::out_of_range("proxy range exceeds the truncation");
    std::vector<ExtValue> out;
    for (int level = n_lo; level <= n_hi; ++level) {
        ExtValue sum(Rational(0));
        for (int i = 0; i < g.level_size(level); ++i) {
            VertexId mu{level, i};
            Rational d = g.shifted_dim(lambda, mu);
            if (d.is_zero()) continue;  // mu not above lambda
            ExtValue value = fn.eval(mu);
            if (value.is_infinite() || value.is_zero()) continue;
            sum += ExtValue(d) * value;
        }
        out.push_back(std::move(sum));
    }
    return out;
}

std::string residual_report_to_tsv(const ResidualReport& report, const GradedGraph& g) {
    std::ostringstream out;
    out << "vertex\tlhs\trhs\tstatus\n";
    for (const auto& row : report.rows)
        out << g.label(row.vertex) << "\t" << row.lhs.to_string() << "\t" << row.rhs.to_string()
            << "\t" << residual_status_name(row.status) << "\n";
    return out.str();
}

std::string boyer_report_to_tsv(const BoyerReport& report, const GradedGraph& g) {
    std::ostringstream out;
    out << "eta\tlhs\trhs\tslack\n";
    for (const auto& row : report.rows)
        out << g.label(row.eta) << "\t" << row.lhs.to_string() << "\t" << row.rhs.to_string()
            << "\t" << SignedRat(row.lhs.raw() - row.rhs.raw()).str() << "\n";
    return out.str();
}

}  // namespace bh
