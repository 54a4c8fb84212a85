#pragma once

#include "bh/extnum.hpp"
#include "bh/graph.hpp"
#include "bh/ideals.hpp"
#include "bh/young.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

namespace bh {

class HarmonicFn;
using FnPtr = std::shared_ptr<const HarmonicFn>;

struct TableSpec {
    std::map<std::pair<int, int>, ExtValue> values;  // keyed by (level, index)
};

struct ThomaSpecFn {
    ThomaParams params;
};

struct FlangeSpecFn {
    FlangeSpec spec;
};

enum class ProductCase { case1, case2, case3 };

/// The three product families: case1 is the weighted product
/// w1^|la| w2^|mu| f1(la) f2(mu); case2/case3 pin one coordinate to a
/// distinguished vertex, with +inf strictly below it and 0 elsewhere.
struct ProductSpec {
    ProductCase kase = ProductCase::case1;
    Rational w1;  // case1 weight in (0,1); w2 = 1 - w1
    FnPtr f1;     // on factor 1 (case1, case2)
    FnPtr f2;     // on factor 2 (case1, case3)
    VertexId nu2; // case2: distinguished vertex of factor 2
    VertexId nu1; // case3: distinguished vertex of factor 1
};

enum class SlowFamily { fin_case1, fin_case2, semifin2, semifin3 };

/// Families on a slow graph N x Gamma. fin_case1: (1-w)^n w^|mu| f(mu)
/// with 0^0 = 1; fin_case2: indicator of mu = root; semifin2: 0 / inf / c
/// by comparison with nu; semifin3: 0 / inf / f(mu) by comparison with m.
struct SlowSpec {
    SlowFamily family = SlowFamily::fin_case1;
    Rational w;    // fin_case1, in (0,1]
    FnPtr inner;   // fin_case1 and semifin3
    VertexId nu;   // semifin2, vertex of Gamma, != root
    Rational c;    // semifin2, positive
    int m = 0;     // semifin3, >= 1
};

/// Truncated realization of the extension-from-ideal map: inner values on
/// the ideal itself, and the level-N partial sum everywhere else.
struct ExtensionSpec {
    std::shared_ptr<const VertexSet> ideal;
    FnPtr inner;
    int level = 0;
};

using FnVariant = std::variant<TableSpec, ThomaSpecFn, FlangeSpecFn, ProductSpec, SlowSpec, ExtensionSpec>;

/// A harmonic-function evaluator: a spec plus a write-once memo. Evaluation
/// is pure, total on the truncation, and safe to call concurrently.
class HarmonicFn {
public:
    HarmonicFn(GraphPtr graph, FnVariant spec, std::string description);

    const GraphPtr& graph() const { return graph_; }
    const FnVariant& spec() const { return spec_; }
    const std::string& description() const { return description_; }

    ExtValue eval(VertexId v) const;
    ExtValue eval(const std::string& label) const { return eval(graph_->vertex(label)); }

private:
    ExtValue compute(VertexId v) const;

    GraphPtr graph_;
    FnVariant spec_;
    std::string description_;
    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<int, int>, ExtValue> memo_;
};

FnPtr make_table_fn(GraphPtr graph, TableSpec table, std::string description = "table");
FnPtr make_thoma_fn(GraphPtr young_graph, ThomaParams params);
FnPtr make_flange_fn(GraphPtr young_graph, FlangeSpec spec);
FnPtr make_extension_fn(GraphPtr graph, std::shared_ptr<const VertexSet> ideal, FnPtr inner,
                        int level);
/// Densifies fn into a table on levels 0..horizon.
FnPtr tabulate(const HarmonicFn& fn, int horizon);

enum class ResidualStatus { exact, infinite_consistent, violated };

std::string residual_status_name(ResidualStatus s);

struct ResidualRow {
    VertexId vertex;
    ExtValue lhs;
    ExtValue rhs;
    ResidualStatus status;
};

/// Per-vertex harmonicity report for levels 0..horizon. lhs = phi(v),
/// rhs = sum kappa(v, w) phi(w) in extended arithmetic.
struct ResidualReport {
    int horizon = 0;
    std::vector<ResidualRow> rows;
    int exact = 0;
    int infinite_consistent = 0;
    int violated = 0;
    bool ok() const { return violated == 0; }
};

ResidualReport harmonicity_residuals(const HarmonicFn& fn, int up_to_level);

VertexSet finiteness_ideal(const HarmonicFn& fn, int up_to_level);
VertexSet kernel(const HarmonicFn& fn, int up_to_level);
VertexSet support(const HarmonicFn& fn, int up_to_level);

/// N-th truncation of the extension map: sum over mu in I at level N of
/// dim(target, mu) * inner(mu). Nondecreasing in N; constant equal to
/// inner(target) once target lies in I.
ExtValue extend_from_ideal(const VertexSet& ideal, const HarmonicFn& inner, VertexId target,
                           int level);

struct BoyerRow {
    VertexId eta;
    Rational lhs;  // sum over mu in J of dim(lambda, mu) kappa(mu, eta)
    Rational rhs;  // beta * dim(lambda_prime, eta)
    bool violated = false;
};

struct BoyerReport {
    std::vector<BoyerRow> rows;
    int violations = 0;
    SignedRat min_slack = 0;  // min over rows of lhs - rhs
    bool ok() const { return violations == 0; }
    bool all_equality() const;
};

/// Checks the dimension-comparison inequality
///   sum_{mu in J} dim(lambda, mu) kappa(mu, eta) >= beta * dim(lambda', eta)
/// for every eta in I with level in [level_lo, level_hi].
BoyerReport boyer_check(const VertexSet& ideal, VertexId lambda, VertexId lambda_prime,
                        const Rational& beta, int level_lo, int level_hi);

/// Finite-part approximations of fn(lambda): for each N in [n_lo, n_hi],
/// the sum of dim(lambda, mu) fn(mu) over mu >= lambda at level N with
/// 0 < fn(mu) < +inf.
std::vector<ExtValue> semifinite_proxy_sequence(const HarmonicFn& fn, VertexId lambda, int n_lo,
                                                int n_hi);

std::string residual_report_to_tsv(const ResidualReport& report, const GradedGraph& g);
std::string boyer_report_to_tsv(const BoyerReport& report, const GradedGraph& g);

}  // namespace bh
