#include "cgt/surreal.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace cgt {

SurrealRF::SurrealRF(const Rational& q)
    : numerator_(IntPoly(numerator(q))), denominator_(IntPoly(denominator(q))) {}

SurrealRF::SurrealRF(IntPoly num, IntPoly den)
    : numerator_(std::move(num)), denominator_(std::move(den)) {
    if (denominator_.is_zero()) throw DivisionByZero();
    normalize();
}

void SurrealRF::normalize() {
    if (numerator_.is_zero()) {
        denominator_ = IntPoly::one();
        return;
    }
    IntPoly g = IntPoly::gcd(numerator_, denominator_);
    if (g.degree() > 0 || g.coefficient(0) != 1) {
        numerator_ = numerator_.divide_exact(g);
        denominator_ = denominator_.divide_exact(g);
    }
    if (denominator_.leading() < 0) {
        numerator_ = -numerator_;
        denominator_ = -denominator_;
    }
}

Rational SurrealRF::standard_part() const {
    int dn = numerator_.degree(), dd = denominator_.degree();
    if (dn > dd) throw InfiniteValue();
    if (dn < dd) return Rational(0);
    return Rational(numerator_.leading(), denominator_.leading());
}

SurrealRF SurrealRF::operator-() const {
    SurrealRF r;
    r.numerator_ = -numerator_;
    r.denominator_ = denominator_;
    return r;
}

SurrealRF SurrealRF::operator+(const SurrealRF& o) const {
    return SurrealRF(numerator_ * o.denominator_ + o.numerator_ * denominator_,
                     denominator_ * o.denominator_);
}

SurrealRF SurrealRF::operator-(const SurrealRF& o) const { return *this + (-o); }

SurrealRF SurrealRF::operator*(const SurrealRF& o) const {
    return SurrealRF(numerator_ * o.numerator_, denominator_ * o.denominator_);
}

SurrealRF SurrealRF::operator/(const SurrealRF& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return SurrealRF(numerator_ * o.denominator_, denominator_ * o.numerator_);
}

int SurrealRF::compare(const SurrealRF& o) const {
    // Denominators have positive leading coefficients, so the difference's
    // sign is the eventual sign of the cross-multiplied numerator.
    IntPoly diff = numerator_ * o.denominator_ - o.numerator_ * denominator_;
    return sign_at_infinity(diff);
}

std::string SurrealRF::str() const {
    if (numerator_.degree() <= 0 && denominator_.degree() <= 0) {
        BigInt n = numerator_.coefficient(0), d = denominator_.coefficient(0);
        if (d == 1) return n.str();
        return n.str() + "/" + d.str();
    }
    return "(" + numerator_.str() + ")/(" + denominator_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const SurrealRF& x) { return os << x.str(); }

namespace {

// Recursive-descent parser for field literals:
//   fexpr := fterm (('+'|'-') fterm)*
//   fterm := ffac (('*'|'/') ffac)*
//   ffac  := '-' ffac | integer | 'w' ('^' natural)? | '(' fexpr ')'
// The exponent form round-trips the canonical output of str().
class FieldParser {
public:
    explicit FieldParser(std::string_view text) : text_(text) {}

    SurrealRF run() {
        SurrealRF v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BigInt integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    SurrealRF expr() {
        SurrealRF v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    SurrealRF term() {
        SurrealRF v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) v /= factor();
            else return v;
        }
    }

    SurrealRF factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            SurrealRF v = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (c == 'w') {
            ++pos_;
            if (eat('^')) {
                BigInt e = integer();
                if (e > 64) throw ParseError("exponent too large", pos_);
                return SurrealRF(IntPoly::monomial(1, e.convert_to<unsigned>()), IntPoly::one());
            }
            return SurrealRF::omega();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return SurrealRF(integer());
        throw ParseError("expected factor", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SurrealRF SurrealRF::parse(std::string_view text) { return FieldParser(text).run(); }

}  // namespace cgt
