#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>

#include "cgt/errors.hpp"

namespace cgt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign to_sign(int s) {
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

std::string to_string(Sign s);

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

// Floor and ceiling of an exact rational.
BigInt rational_floor(const Rational& q);
BigInt rational_ceil(const Rational& q);

std::string rational_str(const Rational& q);

// A reduced dyadic fraction numerator / 2^exponent. Reduced means the
// numerator is odd unless the exponent is zero.
class DyadicRational {
public:
    DyadicRational() = default;
    DyadicRational(BigInt numerator, unsigned exponent);
    DyadicRational(long numerator, unsigned exponent)
        : DyadicRational(BigInt(numerator), exponent) {}

    static DyadicRational from_integer(BigInt n) { return DyadicRational(std::move(n), 0); }
    // Empty when the rational's denominator is not a power of two.
    static std::optional<DyadicRational> from_rational(const Rational& q);

    const BigInt& numerator() const { return numerator_; }
    unsigned exponent() const { return exponent_; }
    Rational to_rational() const;

    bool is_zero() const { return numerator_.is_zero(); }
    bool is_integer() const { return exponent_ == 0; }
    int sign() const { return numerator_.sign(); }

    DyadicRational operator-() const { return DyadicRational(-numerator_, exponent_); }
    DyadicRational operator+(const DyadicRational& o) const;
    DyadicRational operator-(const DyadicRational& o) const { return *this + (-o); }

    // Exact half; exponent grows by one unless the numerator is even.
    DyadicRational half() const { return DyadicRational(numerator_, exponent_ + 1); }

    int compare(const DyadicRational& o) const;
    bool operator==(const DyadicRational& o) const {
        return numerator_ == o.numerator_ && exponent_ == o.exponent_;
    }
    bool operator<(const DyadicRational& o) const { return compare(o) < 0; }
    bool operator<=(const DyadicRational& o) const { return compare(o) <= 0; }
    bool operator>(const DyadicRational& o) const { return compare(o) > 0; }
    bool operator>=(const DyadicRational& o) const { return compare(o) >= 0; }

    std::string str() const;

private:
    BigInt numerator_ = 0;
    unsigned exponent_ = 0;
};

// The simplest (earliest-born) dyadic strictly above `lo` and strictly below
// `hi`; absent bounds are unconstrained sides. Requires lo < hi when both are
// present. Integers are simpler than proper fractions; among integers the one
// of least absolute value wins, among fractions the least reduced exponent.
DyadicRational simplest_between(const std::optional<DyadicRational>& lo,
                                const std::optional<DyadicRational>& hi);

// x itself when x is dyadic, otherwise the integer ceiling of x.
DyadicRational dyadic_ceil(const Rational& x);

}  // namespace cgt
