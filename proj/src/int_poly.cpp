#include "cgt/int_poly.hpp"

#include <stdexcept>
#include <utility>

namespace cgt {

IntPoly::IntPoly(BigInt constant) {
    if (!constant.is_zero()) coefficients_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

IntPoly IntPoly::monomial(BigInt coefficient, unsigned power) {
    if (coefficient.is_zero()) return IntPoly();
    std::vector<BigInt> c(power + 1);
    c[power] = std::move(coefficient);
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

BigInt IntPoly::coefficient(unsigned power) const {
    if (power >= coefficients_.size()) return BigInt(0);
    return coefficients_[power];
}

const BigInt& IntPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coefficients_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coefficients_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> c(std::max(coefficients_.size(), o.coefficients_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < coefficients_.size()) c[i] += coefficients_[i];
        if (i < o.coefficients_.size()) c[i] += o.coefficients_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> c(coefficients_.size() + o.coefficients_.size() - 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < o.coefficients_.size(); ++j)
            c[i + j] += coefficients_[i] * o.coefficients_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    if (s.is_zero()) return IntPoly();
    IntPoly r(*this);
    for (auto& c : r.coefficients_) c *= s;
    return r;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coefficients_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    IntPoly r(*this);
    for (auto& c : r.coefficients_) c /= g;
    return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("divide_exact by zero polynomial");
    if (is_zero()) return IntPoly();
    std::vector<BigInt> rem = coefficients_;
    int dr = degree(), dd = divisor.degree();
    if (dr < dd) throw std::logic_error("divide_exact: not divisible");
    std::vector<BigInt> quot(dr - dd + 1);
    for (int k = dr - dd; k >= 0; --k) {
        BigInt& lead = rem[k + dd];
        if (lead.is_zero()) continue;
        BigInt q = lead / divisor.leading();
        if (q * divisor.leading() != lead) throw std::logic_error("divide_exact: not divisible");
        quot[k] = q;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= q * divisor.coefficients()[i];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw std::logic_error("divide_exact: nonzero remainder");
    return IntPoly(std::move(quot));
}

Rational IntPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * x + Rational(*it);
    return acc;
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        IntPoly scaled = a * b.leading();
        IntPoly sub = b * IntPoly::monomial(a.leading(), shift);
        a = scaled - sub;
    }
    return a;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    BigInt content_gcd = boost::multiprecision::gcd(a.content(), b.content());
    IntPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_remainder(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    IntPoly g = u * content_gcd;
    return g.leading() < 0 ? -g : g;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int p = degree(); p >= 0; --p) {
        const BigInt& c = coefficients_[p];
        if (c.is_zero()) continue;
        BigInt mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (p == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += p == 1 ? "w" : "w^" + std::to_string(p);
        }
    }
    return out;
}

}  // namespace cgt
