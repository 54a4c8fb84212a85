#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bh {

using BigInt = boost::multiprecision::cpp_int;
// Signed exact rational, used internally where cancellation occurs
// (character sums); the public value types below stay nonnegative.
using SignedRat = boost::multiprecision::cpp_rational;

/// Nonnegative exact rational, always reduced with positive denominator,
/// so equality is structural and serialized forms are canonical.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {
        if (n < 0) throw std::invalid_argument("Rational: negative value");
    }
    Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive");
        if (num < 0) throw std::invalid_argument("Rational: negative value");
    }
    static Rational from_signed(const SignedRat& r) {
        if (r < 0) throw std::invalid_argument("Rational: negative value");
        Rational q;
        q.v_ = r;
        return q;
    }

    const SignedRat& raw() const { return v_; }
    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_ == 0; }

    Rational operator+(const Rational& o) const { return from(v_ + o.v_); }
    Rational operator*(const Rational& o) const { return from(v_ * o.v_); }
    /// Subtraction is partial: throws if the result would be negative.
    Rational operator-(const Rational& o) const {
        if (v_ < o.v_) throw std::domain_error("Rational: subtraction would be negative");
        return from(v_ - o.v_);
    }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return from(v_ / o.v_);
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    auto operator<=>(const Rational& o) const { return v_.compare(o.v_) <=> 0; }
    bool operator==(const Rational& o) const { return v_ == o.v_; }

    /// Canonical wire format: "p/q", or just "p" when q == 1.
    std::string to_string() const;
    /// Parses the wire format; rejects negatives, zero denominators, junk.
    static std::optional<Rational> parse(std::string_view s);

private:
    static Rational from(const SignedRat& r) {
        Rational q;
        q.v_ = r;
        return q;
    }
    SignedRat v_;
};

/// Value in Q>=0 extended with +infinity, under the 0 * inf = 0 convention.
class ExtValue {
public:
    ExtValue() : fin_(Rational(0)) {}
    ExtValue(Rational r) : fin_(std::move(r)) {}
    ExtValue(long long n) : fin_(Rational(n)) {}
    static ExtValue infinity() {
        ExtValue v;
        v.fin_.reset();
        return v;
    }

    bool is_finite() const { return fin_.has_value(); }
    bool is_infinite() const { return !fin_.has_value(); }
    bool is_zero() const { return fin_ && fin_->is_zero(); }
    bool is_positive() const { return !is_zero(); }
    const Rational& finite() const {
        if (!fin_) throw std::domain_error("ExtValue: infinite value has no finite part");
        return *fin_;
    }

    ExtValue operator+(const ExtValue& o) const {
        if (!fin_ || !o.fin_) return infinity();
        return ExtValue(*fin_ + *o.fin_);
    }
    ExtValue operator*(const ExtValue& o) const {
        // 0 * inf = 0 in either order.
        if (is_zero() || o.is_zero()) return ExtValue(Rational(0));
        if (!fin_ || !o.fin_) return infinity();
        return ExtValue(*fin_ * *o.fin_);
    }
    ExtValue& operator+=(const ExtValue& o) { *this = *this + o; return *this; }
    /// Defined only when both operands are finite.
    ExtValue operator-(const ExtValue& o) const {
        if (!fin_ || !o.fin_) throw std::domain_error("ExtValue: subtraction with infinity");
        return ExtValue(*fin_ - *o.fin_);
    }

    bool operator==(const ExtValue& o) const { return fin_ == o.fin_; }
    /// Total order with Finite(a) < infinity for every a.
    bool operator<(const ExtValue& o) const {
        if (!fin_) return false;
        if (!o.fin_) return true;
        return *fin_ < *o.fin_;
    }
    bool operator<=(const ExtValue& o) const { return *this == o || *this < o; }
    bool operator>(const ExtValue& o) const { return o < *this; }
    bool operator>=(const ExtValue& o) const { return o <= *this; }

    /// "inf", or the Rational wire format.
    std::string to_string() const;
    static std::optional<ExtValue> parse(std::string_view s);

private:
    std::optional<Rational> fin_;  // nullopt encodes +infinity
};

/// C(n, k) as an exact integer-valued rational; 0 when k < 0 or k > n.
/// C(-1, 0) = 1 by the empty-product convention.
Rational binomial(long long n, long long k);

}  // namespace bh
