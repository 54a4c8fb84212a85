#include "bh/young.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace bh {

namespace {

// First-column hook lengths ("beta set") of lambda, a strictly decreasing
// sequence; rim hooks of size r correspond to moves h -> h - r.
std::vector<int> beta_set(const Partition& lambda) {
    int rows = lambda.rows();
    std::vector<int> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = lambda.parts()[i] + rows - 1 - i;
    return beta;
}

Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int rows = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < rows; ++i) {
        int part = beta[i] - (rows - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

BigInt mn_rec(const Partition& lambda, const std::vector<int>& mu, std::size_t mu_pos,
              std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt>& memo) {
    if (mu_pos == mu.size()) return lambda.empty() ? 1 : 0;
    std::vector<int> mu_rest(mu.begin() + mu_pos, mu.end());
    auto key = std::make_pair(lambda.parts(), mu_rest);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = mu[mu_pos];
    std::vector<int> beta = beta_set(lambda);
    BigInt total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int h = beta[i];
        if (h < r) continue;
        int target = h - r;
        bool occupied = false;
        int between = 0;  // beads strictly between target and h: the leg length
        for (int b : beta) {
            if (b == target) occupied = true;
            if (b > target && b < h) ++between;
        }
        if (occupied) continue;
        std::vector<int> next = beta;
        next[i] = target;
        BigInt sub = mn_rec(from_beta_set(std::move(next)), mu, mu_pos + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::mutex mn_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> mn_memo;

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("mn_character: |lambda| != |mu|");
    std::lock_guard<std::mutex> lk(mn_mutex);
    return mn_rec(lambda, mu.parts(), 0, mn_memo);
}

Rational ThomaParams::weight_sum() const {
    Rational s(0);
    for (const auto& a : alpha) s += a;
    for (const auto& b : beta) s += b;
    return s;
}

void ThomaParams::validate() const {
    auto check_sorted_positive = [](const std::vector<Rational>& xs, const char* name) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i].is_zero())
                throw std::invalid_argument(std::string(name) + " entries must be positive");
            if (i && xs[i] > xs[i - 1])
                throw std::invalid_argument(std::string(name) + " must be weakly decreasing");
        }
    };
    check_sorted_positive(alpha, "alpha");
    check_sorted_positive(beta, "beta");
    Rational s = weight_sum();
    if (s > Rational(1)) {
        std::string which = "alpha";
        if (!beta.empty()) which = alpha.empty() ? "beta" : "alpha+beta";
        throw std::invalid_argument(which + " sum exceeds 1");
    }
}

namespace {

// p_1 = 1 and p_n = sum alpha^n + (-1)^(n-1) sum beta^n; signed because the
// beta part alternates.
SignedRat power_sum(const ThomaParams& params, int n) {
    if (n == 1) return SignedRat(1);
    SignedRat p(0);
    for (const auto& a : params.alpha) {
        SignedRat t = a.raw();
        SignedRat acc(1);
        for (int i = 0; i < n; ++i) acc *= t;
        p += acc;
    }
    SignedRat q(0);
    for (const auto& b : params.beta) {
        SignedRat t = b.raw();
        SignedRat acc(1);
        for (int i = 0; i < n; ++i) acc *= t;
        q += acc;
    }
    if (n % 2 == 0) p -= q; else p += q;
    return p;
}

}  // namespace

Rational thoma_eval(const ThomaParams& params, const Partition& lambda) {
    params.validate();
    int n = lambda.size();
    if (n == 0) return Rational(1);
    SignedRat total(0);
    for (const Partition& mu : partitions_of(n)) {
        BigInt chi = mn_character(lambda, mu);
        if (chi == 0) continue;
        SignedRat term(chi);
        term /= SignedRat(cycle_type_order(mu));
        for (int part : mu.parts()) term *= power_sum(params, part);
        total += term;
    }
    // The signed character sums always cancel to a nonnegative total for
    // admissible parameters.
    return Rational::from_signed(total);
}

void FlangeSpec::validate() const {
    if (nu.empty()) throw std::invalid_argument("flange nu must be a non-empty diagram");
    if (k < 0 || l < 0) throw std::invalid_argument("k and l must be nonnegative");
    params.validate();
    if (static_cast<int>(params.alpha.size()) != k)
        throw std::invalid_argument("flange requires exactly k alpha entries");
    if (static_cast<int>(params.beta.size()) != l)
        throw std::invalid_argument("flange requires exactly l beta entries");
    if (params.weight_sum() != Rational(1))
        throw std::invalid_argument("flange requires alpha+beta sum equal to 1");
    if (scale.is_zero()) throw std::invalid_argument("flange scale must be positive");
}

FlangeMembership flange_membership(const FlangeSpec& spec, const Partition& lambda) {
    int len = spec.nu.rows();
    for (int i = 1; i + spec.k <= lambda.rows(); ++i)
        if (lambda.row(spec.k + i) > spec.l + spec.nu.row(i)) return FlangeMembership::outside;
    for (int i = 1; i <= len; ++i)
        if (lambda.row(spec.k + i) < spec.l + spec.nu.row(i))
            return FlangeMembership::inside_not_covering;
    return FlangeMembership::covering;
}

Partition remove_flange(const FlangeSpec& spec, const Partition& lambda) {
    if (flange_membership(spec, lambda) != FlangeMembership::covering)
        throw std::invalid_argument("remove_flange: lambda does not cover the flange");
    std::vector<int> parts;
    int len = spec.nu.rows();
    for (int i = 1; i <= lambda.rows(); ++i) {
        int p = (i > spec.k && i <= spec.k + len) ? spec.l : lambda.row(i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

ExtValue flange_eval(const FlangeSpec& spec, const Partition& lambda) {
    switch (flange_membership(spec, lambda)) {
        case FlangeMembership::outside:
            return ExtValue(Rational(0));
        case FlangeMembership::inside_not_covering:
            return ExtValue::infinity();
        case FlangeMembership::covering:
            return ExtValue(spec.scale * thoma_eval(spec.params, remove_flange(spec, lambda)));
    }
    throw std::logic_error("unreachable");
}

}  // namespace bh
