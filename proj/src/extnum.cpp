#include "bh/extnum.hpp"

#include <cctype>

namespace bh {

std::string Rational::to_string() const {
    std::string s = numerator().str();
    BigInt den = denominator();
    if (den != 1) {
        s += "/";
        s += den.str();
    }
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!all_digits(s)) return std::nullopt;
        return Rational(BigInt(std::string(s)), BigInt(1));
    }
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rational(BigInt(std::string(num)), d);
}

std::string ExtValue::to_string() const {
    return fin_ ? fin_->to_string() : "inf";
}

std::optional<ExtValue> ExtValue::parse(std::string_view s) {
    if (s == "inf") return ExtValue::infinity();
    auto r = Rational::parse(s);
    if (!r) return std::nullopt;
    return ExtValue(*r);
}

Rational binomial(long long n, long long k) {
    if (k < 0) return Rational(0);
    if (k == 0) return Rational(1);
    if (n < k) return Rational(0);
    BigInt acc = 1;
    for (long long i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return Rational(acc, BigInt(1));
}

}  // namespace bh
