#include "cgt/numeric.hpp"

#include <stdexcept>
#include <utility>

namespace cgt {

std::string to_string(Sign s) {
    switch (s) {
        case Sign::negative: return "Negative";
        case Sign::zero: return "Zero";
        case Sign::positive: return "Positive";
    }
    return "?";
}

BigInt rational_floor(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);  // d > 0
    BigInt t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

BigInt rational_ceil(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt t = n / d;
    if (n > 0 && t * d != n) ++t;
    return t;
}

std::string rational_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

DyadicRational::DyadicRational(BigInt numerator, unsigned exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
    if (numerator_.is_zero()) {
        exponent_ = 0;
        return;
    }
    while (exponent_ > 0 && (numerator_ & 1) == 0) {
        numerator_ >>= 1;
        --exponent_;
    }
}

std::optional<DyadicRational> DyadicRational::from_rational(const Rational& q) {
    const BigInt& den = denominator(q);  // positive, coprime with numerator
    if (den == 1) return DyadicRational(numerator(q), 0);
    using boost::multiprecision::lsb;
    using boost::multiprecision::msb;
    if (lsb(den) != msb(den)) return std::nullopt;  // not a power of two
    return DyadicRational(numerator(q), msb(den));
}

Rational DyadicRational::to_rational() const {
    return Rational(numerator_, pow2(exponent_));
}

DyadicRational DyadicRational::operator+(const DyadicRational& o) const {
    unsigned e = std::max(exponent_, o.exponent_);
    BigInt n = numerator_ * pow2(e - exponent_) + o.numerator_ * pow2(e - o.exponent_);
    return DyadicRational(std::move(n), e);
}

int DyadicRational::compare(const DyadicRational& o) const {
    unsigned e = std::max(exponent_, o.exponent_);
    BigInt lhs = numerator_ * pow2(e - exponent_);
    BigInt rhs = o.numerator_ * pow2(e - o.exponent_);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::string DyadicRational::str() const {
    if (exponent_ == 0) return numerator_.str();
    return numerator_.str() + "/" + pow2(exponent_).str();
}

namespace {

// Least integer strictly greater than q.
BigInt integer_above(const Rational& q) { return rational_floor(q) + 1; }
// Greatest integer strictly less than q.
BigInt integer_below(const Rational& q) { return rational_ceil(q) - 1; }

}  // namespace

DyadicRational simplest_between(const std::optional<DyadicRational>& lo,
                                const std::optional<DyadicRational>& hi) {
    if (!lo && !hi) return DyadicRational();
    if (!hi) {
        if (lo->sign() < 0) return DyadicRational();
        return DyadicRational::from_integer(integer_above(lo->to_rational()));
    }
    if (!lo) {
        if (hi->sign() > 0) return DyadicRational();
        return DyadicRational::from_integer(integer_below(hi->to_rational()));
    }
    Rational a = lo->to_rational(), b = hi->to_rational();
    if (a >= b) throw std::logic_error("simplest_between: empty interval");
    if (a.sign() < 0 && b.sign() > 0) return DyadicRational();
    // Prefer an integer when one fits; all candidates lie on one side of
    // zero, so the qualifying integer nearest zero is the simplest.
    if (a.sign() >= 0) {
        BigInt n = integer_above(a);
        if (Rational(n) < b) return DyadicRational::from_integer(n);
    } else {
        BigInt n = integer_below(b);
        if (Rational(n) > a) return DyadicRational::from_integer(n);
    }
    // No integer fits: the first exponent admitting a multiple of 2^-k in
    // the open interval yields the unique simplest fraction.
    for (unsigned k = 1;; ++k) {
        Rational scaled = a * Rational(pow2(k));
        BigInt m = rational_floor(scaled) + 1;
        if (Rational(m, pow2(k)) < b) return DyadicRational(m, k);
    }
}

DyadicRational dyadic_ceil(const Rational& x) {
    if (auto d = DyadicRational::from_rational(x)) return *d;
    return DyadicRational::from_integer(rational_ceil(x));
}

}  // namespace cgt
