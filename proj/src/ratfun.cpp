#include "hecke/ratfun.hpp"

#include <ostream>
#include <stdexcept>

namespace hecke {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    reduce();
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divrem(num_, g).first;
        den_ = Poly::divrem(den_, g).first;
    }
    Rational lc = den_.leading();
    if (lc != Rational(1)) {
        Rational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
    return RatFun(den_, num_);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    if (g.degree() <= 0) return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly da = Poly::divrem(a.den_, g).first;
    Poly db = Poly::divrem(b.den_, g).first;
    return RatFun(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    // cross-reduce first to keep intermediate degrees low
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly n1 = g1.degree() > 0 ? Poly::divrem(a.num_, g1).first : a.num_;
    Poly d2 = g1.degree() > 0 ? Poly::divrem(b.den_, g1).first : b.den_;
    Poly n2 = g2.degree() > 0 ? Poly::divrem(b.num_, g2).first : b.num_;
    Poly d1 = g2.degree() > 0 ? Poly::divrem(a.den_, g2).first : a.den_;
    return RatFun(n1 * n2, d1 * d2);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("RatFun: division by zero function");
    if (a.is_zero()) return RatFun();
    return a * b.inverse();
}

Rational RatFun::eval(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (d.is_zero()) throw std::domain_error("RatFun::eval: pole at evaluation point");
    return num_.eval(t0) / d;
}

ValuationData RatFun::valuation_and_sign(const Rational& t0) const {
    ValuationData v;
    if (is_zero()) {
        v.zero = true;
        return v;
    }
    auto [kn, un] = num_.valuation_at(t0);
    auto [kd, ud] = den_.valuation_at(t0);
    v.order = kn - kd;
    v.leading = un.eval(t0) / ud.eval(t0);
    v.sign = v.leading.sign();
    return v;
}

std::string RatFun::str(const std::string& var) const {
    if (den_ == Poly(Rational(1))) return num_.degree() > 0 ? "(" + num_.str(var) + ")" : num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hecke
