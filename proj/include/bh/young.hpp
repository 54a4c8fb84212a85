#pragma once

#include "bh/extnum.hpp"
#include "bh/partition.hpp"

#include <vector>

namespace bh {

/// Symmetric group character chi^lambda_mu by the Murnaghan-Nakayama
/// recursion (signed; memoized). Requires |lambda| == |mu|.
BigInt mn_character(const Partition& lambda, const Partition& mu);

/// Parameters (alpha, beta) with all entries positive, weakly decreasing,
/// and sum(alpha) + sum(beta) <= 1; gamma carries the remainder.
struct ThomaParams {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;

    Rational weight_sum() const;
    Rational gamma() const { return Rational(1) - weight_sum(); }
    /// Throws with a human-readable reason when invalid.
    void validate() const;
};

/// s_lambda(alpha|beta): the Schur function pushed through
/// p_1 -> 1, p_n -> sum alpha_i^n + (-1)^(n-1) sum beta_j^n.
Rational thoma_eval(const ThomaParams& params, const Partition& lambda);

/// Hook-with-flange shape: k infinite rows, l infinite columns, and a
/// non-empty flange nu at the corner. Requires |alpha| = k, |beta| = l and
/// sum(alpha) + sum(beta) = 1 exactly.
struct FlangeSpec {
    int k = 0;
    int l = 0;
    Partition nu;
    ThomaParams params;
    Rational scale = Rational(1);  // the family is defined up to proportionality

    void validate() const;
};

enum class FlangeMembership { outside, inside_not_covering, covering };

/// inside:   lambda_{k+i} <= l + nu_i for all i >= 1;
/// covering: inside and lambda_{k+i} >= l + nu_i for 1 <= i <= len(nu)
///           (so equality holds on the flange rows).
FlangeMembership flange_membership(const FlangeSpec& spec, const Partition& lambda);

/// lambda with the flange removed. Covering forces lambda_{k+i} = l + nu_i
/// on rows k+1 .. k+len(nu), so removal leaves rows of length exactly l and
/// the result is a genuine partition of size |lambda| - |nu|.
Partition remove_flange(const FlangeSpec& spec, const Partition& lambda);

/// 0 outside the shape, +inf inside while the flange is not covered,
/// scale * thoma_eval(params, lambda - nu) once it is.
ExtValue flange_eval(const FlangeSpec& spec, const Partition& lambda);

}  // namespace bh
