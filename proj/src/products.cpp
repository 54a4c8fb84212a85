#include "bh/products.hpp"

#include <random>
#include <stdexcept>

namespace bh {

namespace {

std::string product_label(const GradedGraph& g1, VertexId a, const GradedGraph& g2, VertexId b) {
    return escape_label_component(g1.label(a)) + std::string(kProductSeparator) +
           escape_label_component(g2.label(b));
}

}  // namespace

GraphPtr direct_product(GraphPtr g1, GraphPtr g2, int max_level, std::string name) {
    if (max_level < 0) throw std::invalid_argument("max_level must be >= 0");
    if (max_level > g1->max_level() + g2->max_level())
        throw std::invalid_argument("insufficient factor truncation for product level " +
                                    std::to_string(max_level));
    if (name.empty()) name = g1->name() + "x" + g2->name();
    GraphBuilder b(std::move(name), g1->is_branching() && g2->is_branching());
    ProductStructure prod;
    prod.g1 = g1;
    prod.g2 = g2;
    prod.coords.resize(max_level + 1);
    for (int k = 0; k <= max_level; ++k) {
        std::vector<std::string> labels;
        for (int n = 0; n <= std::min(k, g1->max_level()); ++n) {
            int m = k - n;
            if (m > g2->max_level()) continue;
            for (int i = 0; i < g1->level_size(n); ++i)
                for (int j = 0; j < g2->level_size(m); ++j) {
                    labels.push_back(product_label(*g1, {n, i}, *g2, {m, j}));
                    prod.coords[k].push_back({VertexId{n, i}, VertexId{m, j}});
                }
        }
        b.add_level(std::move(labels));
    }
    for (int k = 0; k < max_level; ++k) {
        for (const auto& [a, vb] : prod.coords[k]) {
            std::string from = product_label(*g1, a, *g2, vb);
            if (a.level < g1->max_level())
                for (const Edge& e : g1->out_edges(a))
                    b.add_edge(from, product_label(*g1, {a.level + 1, e.target_index}, *g2, vb),
                               e.kappa);
            if (vb.level < g2->max_level())
                for (const Edge& e : g2->out_edges(vb))
                    b.add_edge(from, product_label(*g1, a, *g2, {vb.level + 1, e.target_index}),
                               e.kappa);
        }
    }
    b.set_product(std::move(prod));
    return b.build();
}

VertexId product_vertex(const GradedGraph& product, VertexId a, VertexId b) {
    const auto& prod = product.product();
    if (!prod) throw std::invalid_argument("graph carries no product structure");
    return product.vertex(product_label(*prod->g1, a, *prod->g2, b));
}

std::pair<std::string, std::string> split_product_label(const std::string& label) {
    std::size_t depth_scan = label.find(kProductSeparator);
    if (depth_scan == std::string::npos)
        throw std::invalid_argument("'" + label + "' is not a product label");
    return {unescape_label_component(label.substr(0, depth_scan)),
            unescape_label_component(label.substr(depth_scan + kProductSeparator.size()))};
}

FnPtr make_product_fn(ProductSpec spec, GraphPtr product_graph) {
    const auto& prod = product_graph->product();
    if (!prod) throw std::invalid_argument("make_product_fn requires a product graph");
    std::string desc;
    switch (spec.kase) {
        case ProductCase::case1: {
            if (spec.w1.is_zero() || spec.w1 >= Rational(1))
                throw std::invalid_argument("case1 weight w1 must lie strictly between 0 and 1");
            if (!spec.f1 || !spec.f2) throw std::invalid_argument("case1 requires both factors");
            if (spec.f1->graph().get() != prod->g1.get() ||
                spec.f2->graph().get() != prod->g2.get())
                throw std::invalid_argument("factor functions must live on the factor graphs");
            desc = "product:w1=" + spec.w1.to_string() + ";f1=(" + spec.f1->description() +
                   ");f2=(" + spec.f2->description() + ")";
            break;
        }
        case ProductCase::case2: {
            if (!spec.f1) throw std::invalid_argument("case2 requires f1");
            if (spec.f1->graph().get() != prod->g1.get())
                throw std::invalid_argument("f1 must live on factor 1");
            prod->g2->label(spec.nu2);
            desc = "prod-case2:f1=(" + spec.f1->description() + ");nu2=" +
                   prod->g2->label(spec.nu2);
            break;
        }
        case ProductCase::case3: {
            if (!spec.f2) throw std::invalid_argument("case3 requires f2");
            if (spec.f2->graph().get() != prod->g2.get())
                throw std::invalid_argument("f2 must live on factor 2");
            prod->g1->label(spec.nu1);
            desc = "prod-case3:nu1=" + prod->g1->label(spec.nu1) + ";f2=(" +
                   spec.f2->description() + ")";
            break;
        }
    }
    return std::make_shared<HarmonicFn>(std::move(product_graph), std::move(spec), std::move(desc));
}

namespace {

const ProductStructure& product_of(const HarmonicFn& fn) {
    const auto& prod = fn.graph()->product();
    if (!prod) throw std::invalid_argument("function does not live on a product graph");
    return *prod;
}

Rational finite_value(const HarmonicFn& fn, VertexId v) {
    ExtValue value = fn.eval(v);
    if (value.is_infinite())
        throw std::domain_error("infinite value encountered at '" + fn.graph()->label(v) + "'");
    return value.finite();
}

}  // namespace

Rational recover_weights(const HarmonicFn& fn, int k1, int k2) {
    const auto& prod = product_of(fn);
    if (k1 < 0 || k1 > prod.g1->max_level() || k2 < 0 || k2 > prod.g2->max_level())
        throw std::out_of_range("recover_weights level outside the factor truncations");
    if (k1 + k2 > fn.graph()->max_level())
        throw std::out_of_range("recover_weights level outside the product truncation");
    VertexId root1{0, 0}, root2{0, 0};
    Rational total(0);
    for (int i = 0; i < prod.g1->level_size(k1); ++i)
        for (int j = 0; j < prod.g2->level_size(k2); ++j) {
            Rational d = prod.g1->shifted_dim(root1, {k1, i}) *
                         prod.g2->shifted_dim(root2, {k2, j});
            if (d.is_zero()) continue;
            total += d * finite_value(fn, product_vertex(*fn.graph(), {k1, i}, {k2, j}));
        }
    return total;
}

FactorSeries recover_factor(const HarmonicFn& fn, int which, VertexId vertex, int truncation) {
    if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
    const auto& prod = product_of(fn);
    const GradedGraph& own = which == 1 ? *prod.g1 : *prod.g2;
    const GradedGraph& other = which == 1 ? *prod.g2 : *prod.g1;
    own.label(vertex);
    int k = vertex.level;
    if (truncation < 0) throw std::invalid_argument("truncation must be >= 0");
    if (truncation > other.max_level() || k + truncation > fn.graph()->max_level())
        throw std::out_of_range("recover_factor truncation exceeds the graph truncation");
    FactorSeries out{Rational(0), Rational(0), std::nullopt};
    for (int n = 0; n <= truncation; ++n) {
        Rational level_sum(0);
        for (int j = 0; j < other.level_size(n); ++j) {
            Rational d = other.shifted_dim({0, 0}, {n, j});
            if (d.is_zero()) continue;
            VertexId pv = which == 1 ? product_vertex(*fn.graph(), vertex, {n, j})
                                     : product_vertex(*fn.graph(), {n, j}, vertex);
            level_sum += d * finite_value(fn, pv);
        }
        out.partial += binomial(n + k - 1, n) * level_sum;
        if (n == truncation) out.last_term_level_sum = level_sum;
    }
    // Geometric tail bound, certified for case1 specs: the level sums decay
    // exactly by the opposite weight, and the binomials grow by at most
    // rho = (M + k + 1) / (M + 2) per step.
    if (const auto* pspec = std::get_if<ProductSpec>(&fn.spec());
        pspec && pspec->kase == ProductCase::case1) {
        Rational w_other = which == 1 ? Rational(1) - pspec->w1 : pspec->w1;
        if (k == 0 || out.last_term_level_sum.is_zero()) {
            out.tail_bound = Rational(0);
        } else {
            Rational rho(BigInt(truncation + k + 1), BigInt(truncation + 2));
            if (rho * w_other < Rational(1)) {
                Rational denom = Rational(1) - rho * w_other;
                out.tail_bound = out.last_term_level_sum *
                                 binomial(truncation + k, truncation + 1) * w_other / denom;
            }
        }
    }
    return out;
}

Rational pascal_projection(const HarmonicFn& fn, VertexId nu1, VertexId nu2, int k1, int k2) {
    const auto& prod = product_of(fn);
    prod.g1->label(nu1);
    prod.g2->label(nu2);
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("k1, k2 must be >= 0");
    int l1 = nu1.level + k1, l2 = nu2.level + k2;
    if (l1 > prod.g1->max_level() || l2 > prod.g2->max_level() ||
        l1 + l2 > fn.graph()->max_level())
        throw std::out_of_range("pascal_projection level outside the truncation");
    Rational total(0);
    for (int i = 0; i < prod.g1->level_size(l1); ++i) {
        Rational d1 = prod.g1->shifted_dim(nu1, {l1, i});
        if (d1.is_zero()) continue;
        for (int j = 0; j < prod.g2->level_size(l2); ++j) {
            Rational d2 = prod.g2->shifted_dim(nu2, {l2, j});
            if (d2.is_zero()) continue;
            total += d1 * d2 * finite_value(fn, product_vertex(*fn.graph(), {l1, i}, {l2, j}));
        }
    }
    return total;
}

DimIdentityReport product_dim_identity_check(const GradedGraph& product, int samples,
                                             std::uint64_t seed) {
    const auto& prod = product.product();
    if (!prod) throw std::invalid_argument("product_dim_identity_check requires a product graph");
    std::mt19937_64 rng(seed);
    DimIdentityReport report;
    int top = product.max_level();
    for (int s = 0; s < samples; ++s) {
        int lo = static_cast<int>(rng() % (top + 1));
        int hi = lo + static_cast<int>(rng() % (top - lo + 1));
        VertexId v{lo, static_cast<int>(rng() % product.level_size(lo))};
        VertexId w{hi, static_cast<int>(rng() % product.level_size(hi))};
        auto [mu1, mu2] = prod->coords[v.level][v.index];
        auto [la1, la2] = prod->coords[w.level][w.index];
        int d1 = la1.level - mu1.level;
        int d2 = la2.level - mu2.level;
        Rational expected(0);
        if (d1 >= 0 && d2 >= 0)
            expected = binomial(d1 + d2, d1) * prod->g1->shifted_dim(mu1, la1) *
                       prod->g2->shifted_dim(mu2, la2);
        ++report.checked;
        if (product.shifted_dim(v, w) != expected) ++report.failures;
    }
    return report;
}

}  // namespace bh
