#include "bh/suites.hpp"

#include "bh/fnspec.hpp"
#include "bh/harmonic.hpp"
#include "bh/json_io.hpp"
#include "bh/products.hpp"
#include "bh/slow.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace bh::suites {

namespace {

void record(Results& results, const std::string& name, bool pass, std::string detail = "") {
    results.push_back({name, pass, std::move(detail)});
}

Rational rat(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

// Ten-point rational Thoma parameter panel used across the batteries.
std::vector<ThomaParams> thoma_panel() {
    auto r = [](long long n, long long d) { return rat(n, d); };
    return {
        {{r(1, 1)}, {}},
        {{r(1, 2), r(1, 2)}, {}},
        {{r(1, 2)}, {r(1, 2)}},
        {{}, {r(1, 1)}},
        {{r(1, 2), r(1, 4)}, {r(1, 8)}},
        {{}, {}},
        {{r(2, 3)}, {r(1, 3)}},
        {{r(1, 3), r(1, 3), r(1, 3)}, {}},
        {{r(3, 5)}, {r(1, 5)}},
        {{r(1, 4), r(1, 4)}, {r(1, 4), r(1, 4)}},
    };
}

std::vector<FlangeSpec> flange_panel() {
    auto r = [](long long n, long long d) { return rat(n, d); };
    FlangeSpec a{1, 1, Partition({1}), {{r(1, 2)}, {r(1, 2)}}, Rational(1)};
    FlangeSpec b{2, 0, Partition({2, 1}), {{r(2, 3), r(1, 3)}, {}}, Rational(1)};
    FlangeSpec c{0, 1, Partition({1, 1}), {{}, {r(1, 1)}}, Rational(1)};
    FlangeSpec d{4, 3, Partition({5, 5, 2, 2, 1}),
                 {{r(1, 4), r(1, 4), r(1, 8), r(1, 8)}, {r(1, 12), r(1, 12), r(1, 12)}},
                 Rational(1)};
    return {a, b, c, d};
}

/// The unique normalized harmonic function on the half line.
FnPtr nat_trivial_fn(GraphPtr nat) {
    TableSpec table;
    for (int level = 0; level <= nat->max_level(); ++level)
        table.values[{level, 0}] = ExtValue(Rational(1));
    return make_table_fn(std::move(nat), std::move(table), "nat-trivial");
}

/// Random finite harmonic table: values at the top level are drawn from a
/// small rational pool, lower levels are filled in by the harmonic sum.
FnPtr random_harmonic_table(GraphPtr g, std::mt19937_64& rng) {
    TableSpec table;
    int top = g->max_level();
    for (int i = 0; i < g->level_size(top); ++i)
        table.values[{top, i}] = ExtValue(rat(1 + static_cast<long long>(rng() % 5),
                                              1 + static_cast<long long>(rng() % 4)));
    for (int level = top - 1; level >= 0; --level)
        for (int i = 0; i < g->level_size(level); ++i) {
            ExtValue sum(Rational(0));
            for (const Edge& e : g->out_edges({level, i}))
                sum += ExtValue(e.kappa) * table.values[{level + 1, e.target_index}];
            table.values[{level, i}] = sum;
        }
    return make_table_fn(std::move(g), std::move(table), "random-harmonic");
}

VertexId random_vertex(const GradedGraph& g, std::mt19937_64& rng, int lo_level, int hi_level) {
    int level = lo_level + static_cast<int>(rng() % (hi_level - lo_level + 1));
    return {level, static_cast<int>(rng() % g.level_size(level))};
}

std::string fmt_count(int good, int total) {
    return std::to_string(good) + "/" + std::to_string(total);
}

}  // namespace

Results suite_dims(std::uint64_t seed, int horizon) {
    Results results;
    std::mt19937_64 rng(seed);

    struct Case {
        GraphPtr graph;
        std::string name;
    };
    std::vector<Case> cases;
    cases.push_back({builtin_graph(BuiltinGraph::young, std::max(6, horizon)), "young<=6"});
    cases.push_back({builtin_graph(BuiltinGraph::pascal, 8), "pascal<=8"});
    {
        GraphPtr y5 = builtin_graph(BuiltinGraph::young, 5);
        cases.push_back({direct_product(y5, y5, 5), "(young x young)<=5"});
    }
    for (const auto& c : cases) {
        int good = 0, total = 100;
        for (int t = 0; t < total; ++t) {
            VertexId mu = random_vertex(*c.graph, rng, 0, c.graph->max_level());
            VertexId nu = random_vertex(*c.graph, rng, mu.level, c.graph->max_level());
            Rational sum(0);
            for (const auto& path : c.graph->enumerate_paths(mu, nu, 200000)) sum += path.weight;
            if (sum == c.graph->shifted_dim(mu, nu)) ++good;
        }
        record(results, "dims/path-oracle/" + c.name, good == total, fmt_count(good, total));
    }

    {
        GraphPtr pascal = builtin_graph(BuiltinGraph::pascal, 12);
        bool pass = true;
        for (int n = 0; n <= 12 && pass; ++n)
            for (int j = 0; j <= n; ++j) {
                // level order is (n, 0), (n-1, 1), ..., index j has i = n - j
                if (pascal->shifted_dim({0, 0}, {n, j}) != binomial(n, n - j)) {
                    pass = false;
                    break;
                }
            }
        record(results, "dims/pascal-binomials<=12", pass);
    }

    {
        GraphPtr young = builtin_graph(BuiltinGraph::young, 8);
        bool pass = true;
        for (int n = 0; n <= 8 && pass; ++n)
            for (int i = 0; i < young->level_size(n); ++i) {
                Partition lambda = *Partition::parse(young->label({n, i}));
                if (young->shifted_dim({0, 0}, {n, i}) !=
                    Rational(hook_length_dimension(lambda), BigInt(1))) {
                    pass = false;
                    break;
                }
            }
        record(results, "dims/young-hook-lengths<=8", pass);
    }

    {
        GraphPtr y5 = builtin_graph(BuiltinGraph::young, 5);
        GraphPtr yy = direct_product(y5, y5, 5);
        GraphPtr nat6 = builtin_graph(BuiltinGraph::nat, 6);
        GraphPtr y6 = builtin_graph(BuiltinGraph::young, 6);
        GraphPtr ny = direct_product(nat6, y6, 6);
        for (const auto& [g, name] :
             std::vector<std::pair<GraphPtr, std::string>>{{yy, "(young x young)<=5"},
                                                           {ny, "(nat x young)<=6"}}) {
            const auto& prod = *g->product();
            int bad = 0, total = 0;
            for (int lv = 0; lv <= g->max_level(); ++lv)
                for (int i = 0; i < g->level_size(lv); ++i)
                    for (int lw = lv; lw <= g->max_level(); ++lw)
                        for (int j = 0; j < g->level_size(lw); ++j) {
                            auto [m1, m2] = prod.coords[lv][i];
                            auto [l1, l2] = prod.coords[lw][j];
                            int d1 = l1.level - m1.level, d2 = l2.level - m2.level;
                            Rational expect(0);
                            if (d1 >= 0 && d2 >= 0)
                                expect = binomial(d1 + d2, d1) *
                                         prod.g1->shifted_dim(m1, l1) *
                                         prod.g2->shifted_dim(m2, l2);
                            ++total;
                            if (g->shifted_dim({lv, i}, {lw, j}) != expect) ++bad;
                        }
            record(results, "dims/product-factorization/" + name, bad == 0,
                   fmt_count(total - bad, total));
        }
    }
    return results;
}

Results suite_residuals(std::uint64_t seed, int horizon) {
    Results results;
    (void)seed;
    int build = horizon + 1;
    GraphPtr young = builtin_graph(BuiltinGraph::young, build);
    GraphPtr nat = builtin_graph(BuiltinGraph::nat, build);
    GraphPtr yy = direct_product(young, young, build);
    GraphPtr ny = direct_product(nat, young, build);

    auto check_fn = [&](const std::string& name, const FnPtr& fn) {
        ResidualReport report = harmonicity_residuals(*fn, horizon);
        std::ostringstream detail;
        detail << report.exact << " exact, " << report.infinite_consistent
               << " infinite-consistent, " << report.violated << " violated";
        record(results, "residuals/" + name, report.ok(), detail.str());
    };

    auto panel = thoma_panel();
    for (std::size_t i = 0; i < panel.size(); ++i)
        check_fn("thoma-panel-" + std::to_string(i), make_thoma_fn(young, panel[i]));

    auto flanges = flange_panel();
    for (std::size_t i = 0; i < flanges.size(); ++i)
        check_fn("flange-" + std::to_string(i), make_flange_fn(young, flanges[i]));

    FnPtr thoma_a = make_thoma_fn(young, panel[1]);
    FnPtr thoma_b = make_thoma_fn(young, panel[2]);
    FnPtr plancherel = make_thoma_fn(young, panel[5]);
    FnPtr flange_a = make_flange_fn(young, flanges[0]);
    FnPtr nat_one = nat_trivial_fn(nat);

    {
        ProductSpec s;
        s.kase = ProductCase::case1;
        s.w1 = rat(1, 3);
        s.f1 = thoma_a;
        s.f2 = thoma_b;
        check_fn("product-case1-finite", make_product_fn(s, yy));
    }
    {
        ProductSpec s;
        s.kase = ProductCase::case1;
        s.w1 = rat(2, 5);
        s.f1 = flange_a;
        s.f2 = thoma_b;
        check_fn("product-case1-semifinite", make_product_fn(s, yy));
    }
    {
        ProductSpec s;
        s.kase = ProductCase::case2;
        s.f1 = thoma_a;
        s.nu2 = young->vertex("1");
        check_fn("product-case2", make_product_fn(s, yy));
    }
    {
        ProductSpec s;
        s.kase = ProductCase::case2;
        s.f1 = flange_a;
        s.nu2 = young->vertex("2,1");
        check_fn("product-case2-semifinite", make_product_fn(s, yy));
    }
    {
        ProductSpec s;
        s.kase = ProductCase::case3;
        s.nu1 = young->vertex("1,1");
        s.f2 = plancherel;
        check_fn("product-case3", make_product_fn(s, yy));
    }
    {
        ProductSpec s;
        s.kase = ProductCase::case1;
        s.w1 = rat(1, 2);
        s.f1 = nat_one;
        s.f2 = thoma_a;
        check_fn("product-case1-nat-young", make_product_fn(s, ny));
    }
    {
        ProductSpec s;
        s.kase = ProductCase::case3;
        s.nu1 = nat->vertex("2");
        s.f2 = thoma_b;
        check_fn("product-case3-nat-young", make_product_fn(s, ny));
    }

    // The four families on N x Y.
    {
        SlowSpec s;
        s.family = SlowFamily::fin_case1;
        s.w = rat(1, 2);
        s.inner = flange_a;
        check_fn("slow-flange-w", make_slow_fn(s, ny));
    }
    {
        SlowSpec s;
        s.family = SlowFamily::semifin3;
        s.m = 2;
        s.inner = thoma_a;
        check_fn("slow-thoma-level", make_slow_fn(s, ny));
    }
    {
        SlowSpec s;
        s.family = SlowFamily::semifin3;
        s.m = 1;
        s.inner = flange_a;
        check_fn("slow-flange-level", make_slow_fn(s, ny));
    }
    {
        SlowSpec s;
        s.family = SlowFamily::semifin2;
        s.nu = young->vertex("2,1");
        s.c = Rational(1);
        check_fn("slow-vertex-indicator", make_slow_fn(s, ny));
    }
    {
        SlowSpec s;
        s.family = SlowFamily::fin_case2;
        check_fn("slow-fin-case2", make_slow_fn(s, ny));
    }
    return results;
}

Results suite_normalization() {
    Results results;
    GraphPtr young = builtin_graph(BuiltinGraph::young, 7);
    auto panel = thoma_panel();
    for (std::size_t p = 0; p < panel.size(); ++p) {
        FnPtr fn = make_thoma_fn(young, panel[p]);
        bool pass = true;
        for (int n = 0; n <= 7 && pass; ++n) {
            Rational total(0);
            for (int i = 0; i < young->level_size(n); ++i)
                total += young->shifted_dim({0, 0}, {n, i}) * fn->eval({n, i}).finite();
            if (total != Rational(1)) pass = false;
        }
        record(results, "normalization/thoma-panel-" + std::to_string(p), pass);
    }
    {
        ThomaParams half{{rat(1, 2), rat(1, 2)}, {}};
        bool pass = thoma_eval(half, Partition({2, 1})) == rat(1, 4) &&
                    thoma_eval(half, Partition({3})) == rat(1, 2) &&
                    thoma_eval(half, Partition({1, 1, 1})) == Rational(0);
        record(results, "normalization/worked-values-n3", pass,
               "s_(3)=1/2, s_(2,1)=1/4, s_(1,1,1)=0");
    }
    return results;
}

Results suite_recovery(std::uint64_t seed, int horizon) {
    Results results;
    GraphPtr y6 = builtin_graph(BuiltinGraph::young, std::max(6, horizon));
    GraphPtr yy = direct_product(y6, y6, 6);
    auto panel = thoma_panel();
    FnPtr f1 = make_thoma_fn(y6, panel[1]);
    FnPtr f2 = make_thoma_fn(y6, panel[2]);

    for (Rational w1 : {rat(1, 3), rat(1, 2), rat(2, 5)}) {
        ProductSpec s;
        s.kase = ProductCase::case1;
        s.w1 = w1;
        s.f1 = f1;
        s.f2 = f2;
        FnPtr fn = make_product_fn(s, yy);
        Rational w2 = Rational(1) - w1;
        bool pass = true;
        for (int k1 = 0; k1 <= 6 && pass; ++k1)
            for (int k2 = 0; k1 + k2 <= 6; ++k2) {
                Rational expect(1);
                for (int i = 0; i < k1; ++i) expect *= w1;
                for (int i = 0; i < k2; ++i) expect *= w2;
                if (recover_weights(*fn, k1, k2) != expect) {
                    pass = false;
                    break;
                }
            }
        record(results, "recovery/weights-w1=" + w1.to_string(), pass, "k1+k2<=6 exact");
    }

    // Factor series against the half line: level sums there are single terms,
    // so the M = 40 series is exact and cheap.
    GraphPtr nat46 = builtin_graph(BuiltinGraph::nat, 46);
    GraphPtr ynat = direct_product(y6, nat46, 46);
    FnPtr one = nat_trivial_fn(nat46);
    {
        ProductSpec s;
        s.kase = ProductCase::case1;
        s.w1 = rat(1, 2);
        s.f1 = make_thoma_fn(y6, panel[0]);
        s.f2 = one;
        FnPtr fn = make_product_fn(s, ynat);
        FactorSeries series = recover_factor(*fn, 1, y6->vertex("1"), 40);
        // 1 - 2^-(M+1) at M = 40
        Rational expect = Rational(1) - rat(1, 1ll << 41);
        record(results, "recovery/worked-geometric-series", series.partial == expect,
               "partial(M=40) = 1 - 2^-41");
    }
    {
        bool pass = true;
        std::string detail;
        for (Rational w1 : {rat(1, 3), rat(1, 2), rat(2, 5)}) {
            ProductSpec s;
            s.kase = ProductCase::case1;
            s.w1 = w1;
            s.f1 = f1;
            s.f2 = one;
            FnPtr fn = make_product_fn(s, ynat);
            for (const char* label : {"1", "2", "1,1", "2,1"}) {
                VertexId v = y6->vertex(label);
                FactorSeries series = recover_factor(*fn, 1, v, 40);
                Rational truth = thoma_eval(panel[1], *Partition::parse(label));
                if (!series.tail_bound) {
                    pass = false;
                    detail = "missing tail bound";
                    break;
                }
                if (series.partial > truth || truth - series.partial > *series.tail_bound) {
                    pass = false;
                    detail = std::string("enclosure failed at ") + label;
                    break;
                }
                // pi_1(la) <= 1 / dim_1(la)
                Rational dim1 = y6->shifted_dim({0, 0}, v);
                if (series.partial > Rational(1) / dim1) {
                    pass = false;
                    detail = std::string("dimension bound failed at ") + label;
                    break;
                }
            }
        }
        record(results, "recovery/factor-tail-enclosure", pass, detail);
    }
    {
        // Symmetric recovery of the second factor.
        GraphPtr naty = direct_product(nat46, y6, 46);
        ProductSpec s;
        s.kase = ProductCase::case1;
        s.w1 = rat(3, 5);
        s.f1 = one;
        s.f2 = f2;
        FnPtr fn = make_product_fn(s, naty);
        VertexId v = y6->vertex("2");
        FactorSeries series = recover_factor(*fn, 2, v, 40);
        Rational truth = thoma_eval(panel[2], Partition({2}));
        bool pass = series.tail_bound && series.partial <= truth &&
                    truth - series.partial <= *series.tail_bound;
        record(results, "recovery/factor-two-sided", pass);
    }

    {
        // Pascal harmonicity of the projections for an arbitrary (non-product)
        // finite harmonic table.
        std::mt19937_64 rng(seed);
        GraphPtr y4 = builtin_graph(BuiltinGraph::young, 4);
        GraphPtr yy4 = direct_product(y4, y4, 4);
        FnPtr table = random_harmonic_table(yy4, rng);
        bool pass = true;
        for (int k1 = 0; k1 <= 3 && pass; ++k1)
            for (int k2 = 0; k1 + k2 <= 3; ++k2) {
                Rational here = recover_weights(*table, k1, k2);
                Rational right = recover_weights(*table, k1 + 1, k2);
                Rational up = recover_weights(*table, k1, k2 + 1);
                if (here != right + up) {
                    pass = false;
                    break;
                }
            }
        record(results, "recovery/pascal-harmonicity-weights", pass);

        const auto& prod = *yy4->product();
        VertexId nu1 = random_vertex(*prod.g1, rng, 0, 1);
        VertexId nu2 = random_vertex(*prod.g2, rng, 0, 1);
        pass = true;
        for (int k1 = 0; k1 <= 1 && pass; ++k1)
            for (int k2 = 0; k2 <= 1 - k1; ++k2) {
                Rational here = pascal_projection(*table, nu1, nu2, k1, k2);
                Rational right = pascal_projection(*table, nu1, nu2, k1 + 1, k2);
                Rational up = pascal_projection(*table, nu1, nu2, k1, k2 + 1);
                if (here != right + up) {
                    pass = false;
                    break;
                }
            }
        record(results, "recovery/pascal-harmonicity-projection", pass);
    }
    return results;
}

Results suite_boyer(int horizon) {
    Results results;
    // Gamma = J1 x J2 with J1 = Y (whole graph) and J2 = {empty, (1)}; the
    // ideal I is the J2 = (1) slice and lambda sits on the (1)-predecessor
    // slice, where the inequality is an equality at every eta.
    GraphPtr young = builtin_graph(BuiltinGraph::young, std::max(6, horizon));
    GraphPtr j2 = builtin_graph(BuiltinGraph::young, 1);
    GraphPtr gamma = direct_product(young, j2, std::max(6, horizon));
    {
        std::vector<VertexId> ideal_members;
        const auto& prod = *gamma->product();
        for (int level = 0; level <= gamma->max_level(); ++level)
            for (int i = 0; i < gamma->level_size(level); ++i)
                if (prod.coords[level][i].second.level == 1)
                    ideal_members.push_back({level, i});
        VertexSet ideal = VertexSet::from_members(gamma, SetKind::ideal, ideal_members,
                                                  gamma->max_level());
        VertexId lambda = product_vertex(*gamma, young->vertex(""), j2->vertex(""));
        VertexId lambda_prime = product_vertex(*gamma, young->vertex(""), j2->vertex("1"));
        BoyerReport report = boyer_check(ideal, lambda, lambda_prime, Rational(1), 1, horizon);
        record(results, "boyer/equality-instance",
               report.ok() && report.all_equality() && !report.rows.empty(),
               "min slack " + report.min_slack.str() + " over " +
                   std::to_string(report.rows.size()) + " vertices");

        BoyerReport doubled = boyer_check(ideal, lambda, lambda_prime, Rational(2), 1, horizon);
        record(results, "boyer/doubled-beta-violates", !doubled.ok(),
               std::to_string(doubled.violations) + " violations");
    }

    {
        // One-row coideal as the first factor keeps levels tiny, so the
        // divergent extension can cross 10^3 inside the truncation.
        const int deep = 1050;
        GraphBuilder rows_builder("young-rows", true);
        for (int n = 0; n <= deep; ++n)
            rows_builder.add_level({n == 0 ? "" : std::to_string(n)});
        for (int n = 0; n < deep; ++n)
            rows_builder.add_edge(n == 0 ? "" : std::to_string(n), std::to_string(n + 1),
                                  Rational(1));
        GraphPtr rows = rows_builder.build();
        GraphPtr deep_gamma = direct_product(rows, j2, deep);
        const auto& prod = *deep_gamma->product();
        std::vector<VertexId> ideal_members;
        TableSpec ones;
        for (int level = 0; level <= deep; ++level)
            for (int i = 0; i < deep_gamma->level_size(level); ++i) {
                if (prod.coords[level][i].second.level == 1)
                    ideal_members.push_back({level, i});
                ones.values[{level, i}] = ExtValue(Rational(1));
            }
        VertexSet ideal = VertexSet::from_members(deep_gamma, SetKind::ideal, ideal_members, deep);
        FnPtr inner = make_table_fn(deep_gamma, std::move(ones), "ones");
        VertexId target = product_vertex(*deep_gamma, rows->vertex(""), j2->vertex(""));
        ExtValue prev(Rational(0));
        bool monotone = true;
        int crossing = -1;
        for (int n = 1; n <= deep; ++n) {
            ExtValue s = extend_from_ideal(ideal, *inner, target, n);
            if (s < prev) monotone = false;
            if (crossing < 0 && s > ExtValue(Rational(1000))) crossing = n;
            prev = s;
        }
        record(results, "boyer/extension-exceeds-1000", monotone && crossing > 0,
               crossing > 0 ? "crossed at level " + std::to_string(crossing) : "never crossed");
    }
    return results;
}

Results suite_extension(std::uint64_t seed, int horizon) {
    Results results;
    std::mt19937_64 rng(seed);
    GraphPtr young = builtin_graph(BuiltinGraph::young, std::max(6, horizon));
    GraphPtr nat = builtin_graph(BuiltinGraph::nat, std::max(6, horizon));
    GraphPtr ny = direct_product(nat, young, std::max(6, horizon));
    auto panel = thoma_panel();

    std::vector<std::pair<GraphPtr, std::vector<FnPtr>>> pools;
    {
        std::vector<FnPtr> fns;
        for (std::size_t i : {std::size_t(1), std::size_t(2), std::size_t(5)})
            fns.push_back(make_thoma_fn(young, panel[i]));
        fns.push_back(make_flange_fn(young, flange_panel()[0]));
        pools.emplace_back(young, std::move(fns));
    }
    {
        std::vector<FnPtr> fns;
        SlowSpec s;
        s.family = SlowFamily::fin_case1;
        s.w = rat(1, 2);
        s.inner = make_thoma_fn(young, panel[1]);
        fns.push_back(make_slow_fn(s, ny));
        SlowSpec t;
        t.family = SlowFamily::semifin2;
        t.nu = young->vertex("1");
        t.c = Rational(1);
        fns.push_back(make_slow_fn(t, ny));
        pools.emplace_back(ny, std::move(fns));
    }

    int total = 100, good_monotone = 0, good_constant = 0, constant_cases = 0;
    for (int t = 0; t < total; ++t) {
        const auto& [g, fns] = pools[t % pools.size()];
        int top = g->max_level();
        VertexId gen1 = random_vertex(*g, rng, 0, top);
        VertexId gen2 = random_vertex(*g, rng, 0, top);
        VertexSet ideal = VertexSet::principal_ideal(g, gen1);
        // union of two principal ideals half of the time
        if (rng() % 2 == 0) {
            for (VertexId v : VertexSet::principal_ideal(g, gen2).members()) ideal.insert(v);
            ideal.check_closure();
        }
        const FnPtr& inner = fns[rng() % fns.size()];
        VertexId target = random_vertex(*g, rng, 0, top);
        ExtValue prev(Rational(0));
        bool monotone = true;
        for (int n = 0; n <= top; ++n) {
            ExtValue s = extend_from_ideal(ideal, *inner, target, n);
            if (s < prev) monotone = false;
            prev = s;
        }
        if (monotone) ++good_monotone;
        if (ideal.contains(target)) {
            ++constant_cases;
            bool constant = true;
            ExtValue expect = inner->eval(target);
            for (int n = target.level; n <= top; ++n)
                if (!(extend_from_ideal(ideal, *inner, target, n) == expect)) constant = false;
            if (constant) ++good_constant;
        }
    }
    record(results, "extension/monotone", good_monotone == total, fmt_count(good_monotone, total));
    record(results, "extension/constant-inside-ideal", good_constant == constant_cases,
           fmt_count(good_constant, constant_cases) + " applicable");
    return results;
}

Results suite_slow(std::uint64_t seed, int horizon) {
    Results results;
    GraphPtr young = builtin_graph(BuiltinGraph::young, std::max(6, horizon));
    GraphPtr ny = slow_graph(young, std::max(6, horizon));
    auto panel = thoma_panel();
    auto flanges = flange_panel();

    struct PanelEntry {
        std::string name;
        SlowSpec spec;
    };
    std::vector<PanelEntry> entries;
    auto add_fin1 = [&](const std::string& name, Rational w, FnPtr f) {
        SlowSpec s;
        s.family = SlowFamily::fin_case1;
        s.w = std::move(w);
        s.inner = std::move(f);
        entries.push_back({name, std::move(s)});
    };
    add_fin1("fin1-thoma-half", rat(1, 2), make_thoma_fn(young, panel[1]));
    add_fin1("fin1-thoma-w1", Rational(1), make_thoma_fn(young, panel[2]));
    add_fin1("fin1-plancherel", rat(1, 3), make_thoma_fn(young, panel[5]));
    add_fin1("fin1-flange", rat(2, 5), make_flange_fn(young, flanges[0]));
    add_fin1("fin1-flange-w1", Rational(1), make_flange_fn(young, flanges[0]));
    {
        SlowSpec s;
        s.family = SlowFamily::fin_case2;
        entries.push_back({"fin2", s});
    }
    auto add_semifin2 = [&](const std::string& name, const char* nu, Rational c) {
        SlowSpec s;
        s.family = SlowFamily::semifin2;
        s.nu = young->vertex(nu);
        s.c = std::move(c);
        entries.push_back({name, std::move(s)});
    };
    add_semifin2("semifin2-box", "1", Rational(1));
    add_semifin2("semifin2-hook", "2,1", rat(3, 2));
    add_semifin2("semifin2-row", "3", Rational(2));
    auto add_semifin3 = [&](const std::string& name, int m, FnPtr f) {
        SlowSpec s;
        s.family = SlowFamily::semifin3;
        s.m = m;
        s.inner = std::move(f);
        entries.push_back({name, std::move(s)});
    };
    add_semifin3("semifin3-thoma-m1", 1, make_thoma_fn(young, panel[1]));
    add_semifin3("semifin3-plancherel-m3", 3, make_thoma_fn(young, panel[5]));
    add_semifin3("semifin3-flange-m2", 2, make_flange_fn(young, flanges[0]));
    add_semifin3("semifin3-flange-cols-m1", 1, make_flange_fn(young, flanges[2]));

    for (const auto& entry : entries) {
        FnPtr fn = make_slow_fn(entry.spec, ny);
        FnPtr table = tabulate(*fn, horizon);
        SlowClassification cls = classify_slow_spec(*table, horizon);
        bool pass = cls.spec.has_value() && cls.spec->family == entry.spec.family;
        if (pass) {
            switch (entry.spec.family) {
                case SlowFamily::fin_case1: pass = cls.spec->w == entry.spec.w; break;
                case SlowFamily::fin_case2: break;
                case SlowFamily::semifin2:
                    pass = cls.spec->nu == entry.spec.nu && cls.spec->c == entry.spec.c;
                    break;
                case SlowFamily::semifin3: pass = cls.spec->m == entry.spec.m; break;
            }
        }
        if (pass) {
            FnPtr remade = make_slow_fn(*cls.spec, ny);
            for (int level = 0; level <= horizon && pass; ++level)
                for (int i = 0; i < ny->level_size(level); ++i)
                    if (!(remade->eval({level, i}) == fn->eval({level, i}))) {
                        pass = false;
                        break;
                    }
        }
        record(results, "slow/round-trip/" + entry.name, pass, cls.family_name);
    }

    {
        std::mt19937_64 rng(seed);
        TableSpec junk;
        for (int level = 0; level <= horizon; ++level)
            for (int i = 0; i < ny->level_size(level); ++i)
                junk.values[{level, i}] = ExtValue(rat(static_cast<long long>(rng() % 7),
                                                       1 + static_cast<long long>(rng() % 3)));
        FnPtr table = make_table_fn(ny, std::move(junk), "junk");
        SlowClassification cls = classify_slow_spec(*table, horizon);
        record(results, "slow/random-table-unclassified", !cls.spec.has_value(),
               cls.family_name);
    }
    return results;
}

Results suite_structure(int horizon) {
    Results results;
    int build = horizon + 1;
    GraphPtr young = builtin_graph(BuiltinGraph::young, build);
    GraphPtr nat = builtin_graph(BuiltinGraph::nat, build);
    GraphPtr yy = direct_product(young, young, build);
    GraphPtr ny = direct_product(nat, young, build);
    auto panel = thoma_panel();
    auto flanges = flange_panel();

    FnPtr thoma_rows = make_thoma_fn(young, panel[1]);   // two-row hook support
    FnPtr thoma_hook = make_thoma_fn(young, panel[2]);   // (1,1) hook support
    FnPtr plancherel = make_thoma_fn(young, panel[5]);   // full support
    FnPtr flange_a = make_flange_fn(young, flanges[0]);
    FnPtr flange_c = make_flange_fn(young, flanges[2]);
    FnPtr nat_one = nat_trivial_fn(nat);

    std::vector<std::pair<std::string, FnPtr>> family;
    family.emplace_back("thoma-two-rows", thoma_rows);
    family.emplace_back("thoma-hook", thoma_hook);
    family.emplace_back("plancherel", plancherel);
    family.emplace_back("flange-corner", flange_a);
    family.emplace_back("flange-columns", flange_c);
    {
        ProductSpec s;
        s.kase = ProductCase::case1;
        s.w1 = rat(1, 3);
        s.f1 = thoma_rows;
        s.f2 = thoma_hook;
        family.emplace_back("product-case1", make_product_fn(s, yy));
    }
    {
        ProductSpec s;
        s.kase = ProductCase::case1;
        s.w1 = rat(2, 5);
        s.f1 = flange_a;
        s.f2 = plancherel;
        family.emplace_back("product-case1-semifinite", make_product_fn(s, yy));
    }
    {
        ProductSpec s;
        s.kase = ProductCase::case2;
        s.f1 = plancherel;
        s.nu2 = young->vertex("1");
        family.emplace_back("product-case2", make_product_fn(s, yy));
    }
    {
        ProductSpec s;
        s.kase = ProductCase::case3;
        s.nu1 = nat->vertex("2");
        s.f2 = plancherel;
        family.emplace_back("product-case3", make_product_fn(s, ny));
    }
    {
        SlowSpec s;
        s.family = SlowFamily::fin_case1;
        s.w = rat(1, 2);
        s.inner = plancherel;
        family.emplace_back("slow-fin1", make_slow_fn(s, ny));
    }
    {
        SlowSpec s;
        s.family = SlowFamily::fin_case1;
        s.w = rat(1, 2);
        s.inner = flange_a;
        family.emplace_back("slow-fin1-flange", make_slow_fn(s, ny));
    }
    {
        SlowSpec s;
        s.family = SlowFamily::fin_case2;
        family.emplace_back("slow-fin2", make_slow_fn(s, ny));
    }
    {
        SlowSpec s;
        s.family = SlowFamily::semifin2;
        s.nu = young->vertex("2,1");
        s.c = Rational(1);
        family.emplace_back("slow-semifin2", make_slow_fn(s, ny));
    }
    {
        SlowSpec s;
        s.family = SlowFamily::semifin3;
        s.m = 2;
        s.inner = plancherel;
        family.emplace_back("slow-semifin3", make_slow_fn(s, ny));
    }

    for (const auto& [name, fn] : family) {
        bool pass = true;
        std::string detail;
        try {
            VertexSet k = kernel(*fn, horizon);
            k.check_closure();
            VertexSet fin = finiteness_ideal(*fn, horizon);
            fin.check_closure();
            VertexSet supp = support(*fn, horizon);
            supp.check_closure();
            if (!supp.is_saturated(horizon)) {
                pass = false;
                detail = "support not saturated";
            } else if (!supp.is_primitive_coideal()) {
                pass = false;
                detail = "support not primitive";
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        record(results, "structure/" + name, pass, detail);
    }

    {
        // supp(case1) = supp(f1) x supp(f2)
        ProductSpec s;
        s.kase = ProductCase::case1;
        s.w1 = rat(1, 3);
        s.f1 = flange_a;
        s.f2 = thoma_hook;
        FnPtr fn = make_product_fn(s, yy);
        VertexSet supp = support(*fn, horizon);
        VertexSet s1 = support(*flange_a, horizon);
        VertexSet s2 = support(*thoma_hook, horizon);
        const auto& prod = *yy->product();
        bool pass = true;
        for (int level = 0; level <= horizon && pass; ++level)
            for (int i = 0; i < yy->level_size(level); ++i) {
                auto [a, b] = prod.coords[level][i];
                if (supp.contains({level, i}) != (s1.contains(a) && s2.contains(b))) {
                    pass = false;
                    break;
                }
            }
        record(results, "structure/support-product-factorization", pass);
    }
    return results;
}

Results suite_all(std::uint64_t seed, int horizon) {
    Results all;
    for (const auto& part :
         {suite_dims(seed, horizon), suite_residuals(seed, horizon), suite_normalization(),
          suite_recovery(seed, horizon), suite_boyer(horizon), suite_extension(seed, horizon),
          suite_slow(seed, horizon), suite_structure(horizon)})
        all.insert(all.end(), part.begin(), part.end());
    return all;
}

Results run_suite(const std::string& name, std::uint64_t seed, int horizon) {
    if (name == "dims") return suite_dims(seed, horizon);
    if (name == "residuals") return suite_residuals(seed, horizon);
    if (name == "normalization") return suite_normalization();
    if (name == "recovery") return suite_recovery(seed, horizon);
    if (name == "boyer") return suite_boyer(horizon);
    if (name == "extension") return suite_extension(seed, horizon);
    if (name == "slow") return suite_slow(seed, horizon);
    if (name == "structure") return suite_structure(horizon);
    if (name == "all") return suite_all(seed, horizon);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

bool all_pass(const Results& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

std::string to_tsv(const Results& results) {
    std::ostringstream out;
    out << "status\tcheck\tdetail\n";
    for (const auto& r : results)
        out << (r.pass ? "PASS" : "FAIL") << "\t" << r.name << "\t" << r.detail << "\n";
    return out.str();
}

std::string to_json_text(const Results& results) {
    Json j;
    j["checks"] = Json::array();
    for (const auto& r : results) {
        Json row;
        row["name"] = r.name;
        row["pass"] = r.pass;
        row["detail"] = r.detail;
        j["checks"].push_back(std::move(row));
    }
    j["pass"] = all_pass(results);
    return j.dump(2) + "\n";
}

}  // namespace bh::suites
