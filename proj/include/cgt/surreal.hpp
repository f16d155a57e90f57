#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cgt/int_poly.hpp"
#include "cgt/numeric.hpp"

namespace cgt {

// Element of the ordered field Q(w) of rational functions in the positive
// infinite indeterminate w, ordered by eventual sign. The representation is
// unique: numerator and denominator share no polynomial factor, the joint
// integer content is 1, and the denominator's leading coefficient is positive.
class SurrealRF {
public:
    SurrealRF() : numerator_(), denominator_(IntPoly::one()) {}
    SurrealRF(int n) : SurrealRF(BigInt(n)) {}
    SurrealRF(BigInt n) : numerator_(IntPoly(std::move(n))), denominator_(IntPoly::one()) {}
    explicit SurrealRF(const Rational& q);
    explicit SurrealRF(const DyadicRational& d) : SurrealRF(d.to_rational()) {}
    SurrealRF(IntPoly numerator, IntPoly denominator);  // normalizes

    static SurrealRF omega() { return SurrealRF(IntPoly::indeterminate(), IntPoly::one()); }

    const IntPoly& numerator() const { return numerator_; }
    const IntPoly& denominator() const { return denominator_; }

    bool is_zero() const { return numerator_.is_zero(); }
    Sign sign() const { return to_sign(sign_at_infinity(numerator_)); }

    // Degree comparison: |x| below every positive rational (or x = 0).
    bool is_infinitesimal() const {
        return numerator_.degree() < denominator_.degree();
    }
    bool is_finite() const { return numerator_.degree() <= denominator_.degree(); }

    // The rational limit for large w; throws InfiniteValue on infinite elements.
    Rational standard_part() const;

    SurrealRF operator-() const;
    SurrealRF operator+(const SurrealRF& o) const;
    SurrealRF operator-(const SurrealRF& o) const;
    SurrealRF operator*(const SurrealRF& o) const;
    SurrealRF operator/(const SurrealRF& o) const;  // throws DivisionByZero
    SurrealRF& operator+=(const SurrealRF& o) { return *this = *this + o; }
    SurrealRF& operator-=(const SurrealRF& o) { return *this = *this - o; }
    SurrealRF& operator*=(const SurrealRF& o) { return *this = *this * o; }
    SurrealRF& operator/=(const SurrealRF& o) { return *this = *this / o; }

    // Sign of *this - o, without normalizing the difference.
    int compare(const SurrealRF& o) const;
    bool operator==(const SurrealRF& o) const {
        return numerator_ == o.numerator_ && denominator_ == o.denominator_;
    }
    bool operator<(const SurrealRF& o) const { return compare(o) < 0; }
    bool operator<=(const SurrealRF& o) const { return compare(o) <= 0; }
    bool operator>(const SurrealRF& o) const { return compare(o) > 0; }
    bool operator>=(const SurrealRF& o) const { return compare(o) >= 0; }

    // Field-literal grammar; throws ParseError with the offending position.
    static SurrealRF parse(std::string_view text);

    // Canonical form: a bare rational for degree-0 elements, otherwise
    // "(<numerator>)/(<denominator>)" with descending powers.
    std::string str() const;

private:
    void normalize();
    IntPoly numerator_;
    IntPoly denominator_;
};

std::ostream& operator<<(std::ostream& os, const SurrealRF& x);

}  // namespace cgt
