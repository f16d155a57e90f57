#pragma once

#include <string>
#include <vector>

#include "cgt/numeric.hpp"

namespace cgt {

// Polynomial over the integers in the indeterminate w, stored constant term
// first with a nonzero leading coefficient (the zero polynomial is empty).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(BigInt constant);
    explicit IntPoly(std::vector<BigInt> coefficients);  // trims trailing zeros

    static IntPoly one() { return IntPoly(BigInt(1)); }
    static IntPoly indeterminate() { return monomial(1, 1); }
    static IntPoly monomial(BigInt coefficient, unsigned power);

    bool is_zero() const { return coefficients_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    BigInt coefficient(unsigned power) const;
    const BigInt& leading() const;  // pre: nonzero polynomial
    const std::vector<BigInt>& coefficients() const { return coefficients_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const BigInt& s) const;
    bool operator==(const IntPoly& o) const { return coefficients_ == o.coefficients_; }

    // Nonnegative gcd of all coefficients; 0 for the zero polynomial.
    BigInt content() const;
    IntPoly primitive_part() const;

    // Exact quotient; throws std::logic_error if the division leaves a remainder.
    IntPoly divide_exact(const IntPoly& divisor) const;

    Rational evaluate(const Rational& x) const;

    // gcd over Z[w] with positive leading coefficient (primitive PRS).
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    // Descending powers, e.g. "2*w^2-w+3"; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> coefficients_;
};

// Sign of p(w) for w beyond every root, i.e. the sign of the leading coefficient.
inline int sign_at_infinity(const IntPoly& p) {
    return p.is_zero() ? 0 : p.leading().sign();
}

}  // namespace cgt
