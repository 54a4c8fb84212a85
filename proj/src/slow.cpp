#include "bh/slow.hpp"

#include <stdexcept>

namespace bh {

namespace {

const ProductStructure& require_slow(const GradedGraph& g) {
    const auto& prod = g.product();
    if (!prod) throw std::invalid_argument("graph '" + g.name() + "' is not a slow graph");
    for (int level = 0; level <= prod->g1->max_level(); ++level)
        if (prod->g1->level_size(level) != 1)
            throw std::invalid_argument("first factor of a slow graph must be the half line");
    return *prod;
}

}  // namespace

GraphPtr slow_graph(GraphPtr gamma, int max_level) {
    if (gamma->max_level() < max_level)
        throw std::invalid_argument("slow_graph requires gamma truncated to at least level " +
                                    std::to_string(max_level));
    GraphPtr nat = builtin_graph(BuiltinGraph::nat, max_level);
    return direct_product(std::move(nat), std::move(gamma), max_level);
}

std::vector<VertexId> lift_path(const GradedGraph& slow, const std::vector<VertexId>& gamma_path,
                                const std::vector<int>& insertion_times) {
    const auto& prod = require_slow(slow);
    if (gamma_path.empty()) throw std::invalid_argument("lift_path requires a nonempty path");
    if (insertion_times.size() + 1 != gamma_path.size())
        throw std::invalid_argument("lift_path needs exactly one insertion time per path edge");
    for (std::size_t t = 0; t < insertion_times.size(); ++t) {
        if (insertion_times[t] <= 0)
            throw std::invalid_argument("insertion times must be positive");
        if (t > 0 && insertion_times[t] <= insertion_times[t - 1])
            throw std::invalid_argument("insertion times must be strictly increasing");
        if (!prod.g2->has_edge(gamma_path[t], gamma_path[t + 1]))
            throw std::invalid_argument("gamma path is not a path: no edge '" +
                                        prod.g2->label(gamma_path[t]) + "' -> '" +
                                        prod.g2->label(gamma_path[t + 1]) + "'");
    }
    int final_level = (insertion_times.empty() ? 0 : insertion_times.back()) +
                      gamma_path.back().level;
    if (final_level > slow.max_level())
        throw std::out_of_range("lifted path leaves the truncation at level " +
                                std::to_string(final_level));
    std::vector<VertexId> out;
    int n = 0;
    out.push_back(product_vertex(slow, {0, 0}, gamma_path.front()));
    for (std::size_t t = 0; t < insertion_times.size(); ++t) {
        while (n < insertion_times[t]) {
            ++n;
            out.push_back(product_vertex(slow, {n, 0}, gamma_path[t]));
        }
        out.push_back(product_vertex(slow, {n, 0}, gamma_path[t + 1]));
    }
    return out;
}

FnPtr make_slow_fn(SlowSpec spec, GraphPtr slow) {
    const auto& prod = require_slow(*slow);
    std::string desc;
    switch (spec.family) {
        case SlowFamily::fin_case1: {
            if (spec.w.is_zero() || spec.w > Rational(1))
                throw std::invalid_argument("fin-case1 weight w must lie in (0, 1]");
            if (!spec.inner) throw std::invalid_argument("fin-case1 requires an inner function");
            if (spec.inner->graph().get() != prod.g2.get())
                throw std::invalid_argument("inner function must live on gamma");
            desc = "slow:w=" + spec.w.to_string() + ";f=(" + spec.inner->description() + ")";
            break;
        }
        case SlowFamily::fin_case2:
            if (prod.g2->level_size(0) != 1)
                throw std::invalid_argument("fin-case2 requires a branching gamma");
            desc = "slow-fin2";
            break;
        case SlowFamily::semifin2: {
            prod.g2->label(spec.nu);
            if (spec.nu.level == 0)
                throw std::invalid_argument("semifin2 requires nu distinct from the root");
            if (spec.c.is_zero()) throw std::invalid_argument("semifin2 requires c > 0");
            desc = "slow-case2:nu=" + prod.g2->label(spec.nu) + ";c=" + spec.c.to_string();
            break;
        }
        case SlowFamily::semifin3: {
            if (spec.m < 1) throw std::invalid_argument("semifin3 requires m >= 1");
            if (!spec.inner) throw std::invalid_argument("semifin3 requires an inner function");
            if (spec.inner->graph().get() != prod.g2.get())
                throw std::invalid_argument("inner function must live on gamma");
            desc = "slow-case3:m=" + std::to_string(spec.m) + ";f=(" + spec.inner->description() +
                   ")";
            break;
        }
    }
    return std::make_shared<HarmonicFn>(std::move(slow), std::move(spec), std::move(desc));
}

namespace {

struct SlowTable {
    const ProductStructure* prod;
    int horizon;
    // value(n, gamma vertex)
    std::vector<std::vector<ExtValue>> rows;  // rows[n][flat gamma index within level...]
    // gamma vertices visible for a given n: levels 0..horizon-n
    const GradedGraph* gamma;

    ExtValue value(int n, VertexId mu) const { return rows[n][flat(mu)]; }
    int flat(VertexId mu) const {
        int idx = 0;
        for (int level = 0; level < mu.level; ++level) idx += gamma->level_size(level);
        return idx + mu.index;
    }
    std::vector<VertexId> gamma_vertices(int max_gamma_level) const {
        std::vector<VertexId> out;
        int top = std::min(max_gamma_level, gamma->max_level());
        for (int level = 0; level <= top; ++level)
            for (int i = 0; i < gamma->level_size(level); ++i) out.push_back({level, i});
        return out;
    }
};

SlowTable tabulate_slow(const HarmonicFn& fn, int horizon) {
    const auto& prod = require_slow(*fn.graph());
    if (horizon > fn.graph()->max_level())
        throw std::out_of_range("classification horizon exceeds the truncation");
    SlowTable t;
    t.prod = &prod;
    t.horizon = horizon;
    t.gamma = prod.g2.get();
    int gamma_total = 0;
    for (int level = 0; level <= std::min(horizon, prod.g2->max_level()); ++level)
        gamma_total += prod.g2->level_size(level);
    t.rows.assign(horizon + 1, std::vector<ExtValue>(gamma_total, ExtValue(Rational(0))));
    for (int n = 0; n <= horizon; ++n)
        for (VertexId mu : t.gamma_vertices(horizon - n))
            t.rows[n][t.flat(mu)] = fn.eval(product_vertex(*fn.graph(), {n, 0}, mu));
    return t;
}

ExtValue ext_div_pow(const ExtValue& v, const Rational& w, int exp) {
    if (v.is_infinite()) return v;
    Rational scale(1);
    for (int i = 0; i < exp; ++i) scale *= w;
    return ExtValue(v.finite() / scale);
}

Rational rat_pow_local(const Rational& base, int exp) {
    Rational acc(1);
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

bool matches_fin_case2(const SlowTable& t) {
    for (int n = 0; n <= t.horizon; ++n)
        for (VertexId mu : t.gamma_vertices(t.horizon - n)) {
            ExtValue expected(Rational(mu.level == 0 ? 1 : 0));
            if (!(t.value(n, mu) == expected)) return false;
        }
    return true;
}

std::optional<SlowSpec> match_semifin2(const SlowTable& t) {
    // finite positive values must sit at a single gamma vertex nu != root
    std::optional<VertexId> nu;
    for (VertexId mu : t.gamma_vertices(t.horizon)) {
        ExtValue v = t.value(0, mu);
        if (v.is_finite() && !v.is_zero()) {
            if (nu) return std::nullopt;
            nu = mu;
        }
    }
    if (!nu || nu->level == 0) return std::nullopt;
    Rational c = t.value(0, *nu).finite();
    for (int n = 0; n <= t.horizon; ++n)
        for (VertexId mu : t.gamma_vertices(t.horizon - n)) {
            ExtValue expected(Rational(0));
            if (t.gamma->leq(mu, *nu))
                expected = (mu == *nu) ? ExtValue(c) : ExtValue::infinity();
            if (!(t.value(n, mu) == expected)) return std::nullopt;
        }
    SlowSpec spec;
    spec.family = SlowFamily::semifin2;
    spec.nu = *nu;
    spec.c = c;
    return spec;
}

FnPtr gamma_row_as_table(const SlowTable& t, int n, const std::string& desc) {
    TableSpec table;
    for (VertexId mu : t.gamma_vertices(t.horizon - n))
        table.values[{mu.level, mu.index}] = t.value(n, mu);
    return make_table_fn(t.prod->g2, std::move(table), desc);
}

std::optional<SlowSpec> match_semifin3(const SlowTable& t) {
    int m = -1;
    for (int n = 0; n <= t.horizon; ++n)
        for (VertexId mu : t.gamma_vertices(t.horizon - n))
            if (!t.value(n, mu).is_zero()) m = std::max(m, n);
    if (m < 1) return std::nullopt;
    for (int n = 0; n < m; ++n)
        for (VertexId mu : t.gamma_vertices(t.horizon - n))
            if (!t.value(n, mu).is_infinite()) return std::nullopt;
    for (int n = m + 1; n <= t.horizon; ++n)
        for (VertexId mu : t.gamma_vertices(t.horizon - n))
            if (!t.value(n, mu).is_zero()) return std::nullopt;
    SlowSpec spec;
    spec.family = SlowFamily::semifin3;
    spec.m = m;
    spec.inner = gamma_row_as_table(t, m, "recovered-row@" + std::to_string(m));
    return spec;
}

std::optional<SlowSpec> match_fin_case1(const SlowTable& t) {
    // Recover 1 - w from a vertical ratio at a finite positive entry.
    std::optional<Rational> one_minus_w;
    for (VertexId mu : t.gamma_vertices(t.horizon - 1)) {
        ExtValue base = t.value(0, mu);
        if (base.is_finite() && !base.is_zero()) {
            ExtValue up = t.value(1, mu);
            if (up.is_infinite()) return std::nullopt;
            one_minus_w = up.finite() / base.finite();
            break;
        }
    }
    if (!one_minus_w) return std::nullopt;
    if (*one_minus_w >= Rational(1)) return std::nullopt;  // needs w in (0, 1]
    Rational w = Rational(1) - *one_minus_w;
    TableSpec inner;
    for (VertexId mu : t.gamma_vertices(t.horizon))
        inner.values[{mu.level, mu.index}] = ext_div_pow(t.value(0, mu), w, mu.level);
    FnPtr f = make_table_fn(t.prod->g2, std::move(inner), "recovered-factor");
    for (int n = 0; n <= t.horizon; ++n)
        for (VertexId mu : t.gamma_vertices(t.horizon - n)) {
            ExtValue expected = ExtValue(rat_pow_local(*one_minus_w, n) * rat_pow_local(w, mu.level)) *
                                f->eval(mu);
            if (!(t.value(n, mu) == expected)) return std::nullopt;
        }
    SlowSpec spec;
    spec.family = SlowFamily::fin_case1;
    spec.w = w;
    spec.inner = f;
    return spec;
}

}  // namespace

SlowClassification classify_slow_spec(const HarmonicFn& fn, int horizon) {
    SlowTable t = tabulate_slow(fn, horizon);
    if (matches_fin_case2(t)) {
        SlowSpec spec;
        spec.family = SlowFamily::fin_case2;
        return {spec, "fin-case2"};
    }
    if (auto spec = match_semifin2(t)) return {*spec, "semifin2"};
    if (auto spec = match_semifin3(t)) return {*spec, "semifin3"};
    if (auto spec = match_fin_case1(t)) return {*spec, "fin-case1"};
    return {std::nullopt, "unclassified"};
}

}  // namespace bh
